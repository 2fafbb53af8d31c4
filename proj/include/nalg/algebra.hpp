#pragma once

#include "nalg/linalg.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace nalg {

/// Structure constants of one bilinear product: (i, j, k) is the
/// coefficient of e_k in e_i * e_j.
class MultTable {
public:
    MultTable() = default;
    explicit MultTable(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

    /// Table whose product e_i * e_j is rule(i, j).
    static MultTable from_rule(std::size_t dim, const std::function<Vector(std::size_t, std::size_t)>& rule);

    std::size_t dim() const { return dim_; }

    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[index(i, j, k)]; }
    Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[index(i, j, k)]; }

    /// e_i * e_j as a coordinate vector.
    Vector product(std::size_t i, std::size_t j) const;
    void set_product(std::size_t i, std::size_t j, const Vector& v);

    bool is_zero() const;

    friend bool operator==(const MultTable& a, const MultTable& b) = default;

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }

    std::size_t dim_ = 0;
    std::vector<Rational> c_;
};

Vector multiply(const MultTable& t, const Vector& u, const Vector& v);

MultTable table_sum(const MultTable& a, const MultTable& b);
MultTable table_flip(const MultTable& t);
MultTable table_scale(const MultTable& t, const Rational& c);
/// a*ca + b*cb, the shape most constructions need.
MultTable table_combine(const Rational& ca, const MultTable& a, const Rational& cb, const MultTable& b);

enum class Side { Left, Right };

/// Left: column j is e_index * e_j. Right: column j is e_j * e_index.
Matrix mult_operator(const MultTable& t, Side side, std::size_t index);

/// Matrix of f* in the dual basis: -f^T.
Matrix dualize_endo(const Matrix& m);

struct BilinearForm {
    Matrix gram;

    BilinearForm() = default;
    explicit BilinearForm(Matrix g);

    std::size_t dim() const { return gram.rows(); }
    Rational operator()(const Vector& u, const Vector& v) const;

    friend bool operator==(const BilinearForm&, const BilinearForm&) = default;
};

bool form_is_skew(const BilinearForm& w);
bool form_is_symmetric(const BilinearForm& w);
bool form_is_nondegenerate(const BilinearForm& w);

struct LinearEndo {
    Matrix matrix;

    LinearEndo() = default;
    explicit LinearEndo(Matrix m);

    std::size_t dim() const { return matrix.rows(); }
    Vector operator()(const Vector& v) const { return matrix * v; }

    friend bool operator==(const LinearEndo&, const LinearEndo&) = default;
};

/// Families of m x m matrices, one per basis element of an n-dimensional
/// algebra. Leibniz representations use {l, r}; anti-pre-Leibniz ones use
/// {l_succ, r_succ, l_prec, r_prec}.
struct RepBundle {
    std::size_t algebra_dim = 0;
    std::size_t module_dim = 0;
    std::map<std::string, std::vector<Matrix>> maps;

    const std::vector<Matrix>& family(const std::string& name) const;
    void validate() const;
};

struct AlgebraBundle {
    std::size_t dim = 0;
    std::map<std::string, MultTable> products;
    std::map<std::string, BilinearForm> forms;
    std::map<std::string, LinearEndo> maps;

    AlgebraBundle() = default;
    explicit AlgebraBundle(std::size_t n) : dim(n) {}

    const MultTable& product(const std::string& name) const;
    const BilinearForm& form(const std::string& name) const;
    const LinearEndo& map(const std::string& name) const;

    AlgebraBundle& add(const std::string& name, MultTable t);
    AlgebraBundle& add(const std::string& name, BilinearForm w);
    AlgebraBundle& add(const std::string& name, LinearEndo m);

    /// Throws DimensionMismatch if any member disagrees with dim.
    void validate() const;
};

enum class SplitFlavor { AntiPreLeibniz, PreLeibniz, Transformed, NovikovDialgebra };

/// Two products splitting a third. Stored under the flavor's standard names:
/// succ/prec, rhd/lhd, or vdash/dashv.
struct SplitPair {
    SplitFlavor flavor = SplitFlavor::AntiPreLeibniz;
    MultTable first;
    MultTable second;

    std::size_t dim() const { return first.dim(); }
    std::pair<std::string, std::string> names() const;

    /// first + second for (succ, prec) and (rhd, lhd); x vdash y - y dashv x
    /// for the dialgebra flavors.
    MultTable sub_adjacent() const;

    AlgebraBundle to_bundle() const;
    static SplitPair from_bundle(const AlgebraBundle& b, SplitFlavor flavor);

    friend bool operator==(const SplitPair&, const SplitPair&) = default;
};

std::pair<std::string, std::string> split_names(SplitFlavor flavor);

} // namespace nalg
