#include "nalg/algebra.hpp"
#include "nalg/error.hpp"

namespace nalg {

namespace {

void same_dim(std::size_t a, std::size_t b, const char* what)
{
    if (a != b)
        throw Error(ErrorKind::DimensionMismatch, what);
}

} // namespace

MultTable MultTable::from_rule(std::size_t dim, const std::function<Vector(std::size_t, std::size_t)>& rule)
{
    MultTable t(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            t.set_product(i, j, rule(i, j));
    return t;
}

Vector MultTable::product(std::size_t i, std::size_t j) const
{
    if (i >= dim_ || j >= dim_)
        throw Error(ErrorKind::IndexOutOfRange, "basis index out of range");
    Vector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k)
        v[k] = c_[index(i, j, k)];
    return v;
}

void MultTable::set_product(std::size_t i, std::size_t j, const Vector& v)
{
    if (i >= dim_ || j >= dim_)
        throw Error(ErrorKind::IndexOutOfRange, "basis index out of range");
    same_dim(v.size(), dim_, "product vector length differs from table dimension");
    for (std::size_t k = 0; k < dim_; ++k)
        c_[index(i, j, k)] = v[k];
}

bool MultTable::is_zero() const
{
    for (const auto& c : c_)
        if (!c.is_zero())
            return false;
    return true;
}

Vector multiply(const MultTable& t, const Vector& u, const Vector& v)
{
    const std::size_t n = t.dim();
    same_dim(u.size(), n, "left operand length differs from table dimension");
    same_dim(v.size(), n, "right operand length differs from table dimension");
    Vector out(n);
    Rational uv;
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero())
                continue;
            uv = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = t(i, j, k);
                if (!c.is_zero())
                    out[k] += uv * c;
            }
        }
    }
    return out;
}

MultTable table_combine(const Rational& ca, const MultTable& a, const Rational& cb, const MultTable& b)
{
    same_dim(a.dim(), b.dim(), "tables have different dimensions");
    const std::size_t n = a.dim();
    MultTable out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out(i, j, k) = ca * a(i, j, k) + cb * b(i, j, k);
    return out;
}

MultTable table_sum(const MultTable& a, const MultTable& b)
{
    return table_combine(1, a, 1, b);
}

MultTable table_flip(const MultTable& t)
{
    const std::size_t n = t.dim();
    MultTable out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out(i, j, k) = t(j, i, k);
    return out;
}

MultTable table_scale(const MultTable& t, const Rational& c)
{
    return table_combine(c, t, 0, MultTable(t.dim()));
}

Matrix mult_operator(const MultTable& t, Side side, std::size_t index)
{
    const std::size_t n = t.dim();
    if (index >= n)
        throw Error(ErrorKind::IndexOutOfRange, "basis index out of range");
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            m(k, j) = side == Side::Left ? t(index, j, k) : t(j, index, k);
    return m;
}

Matrix dualize_endo(const Matrix& m)
{
    if (!m.is_square())
        throw Error(ErrorKind::DimensionMismatch, "dual map needs a square matrix");
    return -m.transpose();
}

BilinearForm::BilinearForm(Matrix g) : gram(std::move(g))
{
    if (!gram.is_square())
        throw Error(ErrorKind::DimensionMismatch, "gram matrix must be square");
}

Rational BilinearForm::operator()(const Vector& u, const Vector& v) const
{
    return dot(u, gram * v);
}

bool form_is_skew(const BilinearForm& w)
{
    return w.gram == -w.gram.transpose();
}

bool form_is_symmetric(const BilinearForm& w)
{
    return w.gram == w.gram.transpose();
}

bool form_is_nondegenerate(const BilinearForm& w)
{
    return rank(w.gram) == w.dim();
}

LinearEndo::LinearEndo(Matrix m) : matrix(std::move(m))
{
    if (!matrix.is_square())
        throw Error(ErrorKind::DimensionMismatch, "endomorphism matrix must be square");
}

const std::vector<Matrix>& RepBundle::family(const std::string& name) const
{
    auto it = maps.find(name);
    if (it == maps.end())
        throw Error(ErrorKind::UnknownName, "representation has no map '" + name + "'");
    return it->second;
}

void RepBundle::validate() const
{
    for (const auto& [name, mats] : maps) {
        if (mats.size() != algebra_dim)
            throw Error(ErrorKind::DimensionMismatch, "map '" + name + "' needs one matrix per basis element");
        for (const auto& m : mats)
            if (m.rows() != module_dim || m.cols() != module_dim)
                throw Error(ErrorKind::DimensionMismatch, "map '" + name + "' has a matrix of the wrong size");
    }
}

const MultTable& AlgebraBundle::product(const std::string& name) const
{
    auto it = products.find(name);
    if (it == products.end())
        throw Error(ErrorKind::UnknownName, "no product named '" + name + "'");
    return it->second;
}

const BilinearForm& AlgebraBundle::form(const std::string& name) const
{
    auto it = forms.find(name);
    if (it == forms.end())
        throw Error(ErrorKind::UnknownName, "no form named '" + name + "'");
    return it->second;
}

const LinearEndo& AlgebraBundle::map(const std::string& name) const
{
    auto it = maps.find(name);
    if (it == maps.end())
        throw Error(ErrorKind::UnknownName, "no map named '" + name + "'");
    return it->second;
}

AlgebraBundle& AlgebraBundle::add(const std::string& name, MultTable t)
{
    same_dim(t.dim(), dim, "product dimension differs from bundle");
    products.insert_or_assign(name, std::move(t));
    return *this;
}

AlgebraBundle& AlgebraBundle::add(const std::string& name, BilinearForm w)
{
    same_dim(w.dim(), dim, "form dimension differs from bundle");
    forms.insert_or_assign(name, std::move(w));
    return *this;
}

AlgebraBundle& AlgebraBundle::add(const std::string& name, LinearEndo m)
{
    same_dim(m.dim(), dim, "map dimension differs from bundle");
    maps.insert_or_assign(name, std::move(m));
    return *this;
}

void AlgebraBundle::validate() const
{
    for (const auto& [name, t] : products)
        if (t.dim() != dim)
            throw Error(ErrorKind::DimensionMismatch, "product '" + name + "' has the wrong dimension");
    for (const auto& [name, w] : forms)
        if (w.dim() != dim)
            throw Error(ErrorKind::DimensionMismatch, "form '" + name + "' has the wrong dimension");
    for (const auto& [name, m] : maps)
        if (m.dim() != dim)
            throw Error(ErrorKind::DimensionMismatch, "map '" + name + "' has the wrong dimension");
}

std::pair<std::string, std::string> split_names(SplitFlavor flavor)
{
    switch (flavor) {
    case SplitFlavor::AntiPreLeibniz: return {"succ", "prec"};
    case SplitFlavor::PreLeibniz: return {"rhd", "lhd"};
    case SplitFlavor::Transformed:
    case SplitFlavor::NovikovDialgebra: return {"vdash", "dashv"};
    }
    return {"succ", "prec"};
}

std::pair<std::string, std::string> SplitPair::names() const
{
    return split_names(flavor);
}

MultTable SplitPair::sub_adjacent() const
{
    if (flavor == SplitFlavor::AntiPreLeibniz || flavor == SplitFlavor::PreLeibniz)
        return table_sum(first, second);
    return table_combine(1, first, -1, table_flip(second));
}

AlgebraBundle SplitPair::to_bundle() const
{
    auto [a, b] = names();
    AlgebraBundle out(dim());
    out.add(a, first);
    out.add(b, second);
    return out;
}

SplitPair SplitPair::from_bundle(const AlgebraBundle& b, SplitFlavor flavor)
{
    auto [first, second] = split_names(flavor);
    return SplitPair{flavor, b.product(first), b.product(second)};
}

} // namespace nalg
