#pragma once

#include "nalg/algebra.hpp"
#include "nalg/identity.hpp"

#include <map>
#include <vector>

namespace nalg {

/// Finite sum of x_d (x) t^d. Zero coefficients are never stored.
struct LaurentElement {
    std::size_t dim = 0;
    std::map<long, Vector> terms;

    LaurentElement() = default;
    explicit LaurentElement(std::size_t n) : dim(n) {}
    static LaurentElement monomial(const Vector& x, long degree);

    void add(long degree, const Vector& x);
    bool is_zero() const { return terms.empty(); }
    /// Coefficient of t^degree (zero vector when absent).
    Vector coefficient(long degree) const;

    LaurentElement& operator+=(const LaurentElement& o);
    LaurentElement& operator-=(const LaurentElement& o);
    friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
    friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
    friend bool operator==(const LaurentElement&, const LaurentElement&) = default;
};

/// (x t^i)(y t^j) = (x circ y) t^{i+j} + (i x vdash y - j y dashv x) t^{i+j-1}.
LaurentElement affinized_product(const AlgebraBundle& bundle, const LaurentElement& a, const LaurentElement& b);

/// a(bc) - (ab)c - b(ac) for a = e_x t^i, b = e_y t^j, c = e_z t^k.
LaurentElement affinized_leibniz_defect(const AlgebraBundle& bundle, const std::array<std::size_t, 3>& basis,
                                        const std::array<long, 3>& degrees);

/// Leibniz identity of the affinization for every integer degree. Each
/// coefficient of the defect is a polynomial of degree at most 2 in each of
/// i, j, k, so vanishing on {0,1,2}^3 decides it.
CheckReport leibniz_grid_check(const AlgebraBundle& bundle);

/// Leibniz identity of the affinization for degrees drawn from the list.
CheckReport windowed_leibniz_check(const AlgebraBundle& bundle, const std::vector<long>& degrees);

} // namespace nalg
