#include "nalg/affinization.hpp"
#include "nalg/error.hpp"

#include <iterator>

namespace nalg {

LaurentElement LaurentElement::monomial(const Vector& x, long degree)
{
    LaurentElement e(x.size());
    e.add(degree, x);
    return e;
}

void LaurentElement::add(long degree, const Vector& x)
{
    if (x.size() != dim)
        throw Error(ErrorKind::DimensionMismatch, "coefficient length differs from element dimension");
    if (x.is_zero())
        return;
    auto [it, inserted] = terms.try_emplace(degree, x);
    if (!inserted) {
        it->second += x;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

Vector LaurentElement::coefficient(long degree) const
{
    auto it = terms.find(degree);
    return it == terms.end() ? Vector(dim) : it->second;
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& o)
{
    for (const auto& [d, x] : o.terms)
        add(d, x);
    return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& o)
{
    for (const auto& [d, x] : o.terms)
        add(d, -x);
    return *this;
}

LaurentElement affinized_product(const AlgebraBundle& bundle, const LaurentElement& a, const LaurentElement& b)
{
    if (a.dim != bundle.dim || b.dim != bundle.dim)
        throw Error(ErrorKind::DimensionMismatch, "element dimension differs from bundle");
    const MultTable& circ = bundle.product("circ");
    const MultTable& vdash = bundle.product("vdash");
    const MultTable& dashv = bundle.product("dashv");
    LaurentElement out(bundle.dim);
    for (const auto& [i, x] : a.terms)
        for (const auto& [j, y] : b.terms) {
            out.add(i + j, multiply(circ, x, y));
            Vector lower = Rational(i) * multiply(vdash, x, y);
            lower.axpy(Rational(-j), multiply(dashv, y, x));
            out.add(i + j - 1, lower);
        }
    return out;
}

LaurentElement affinized_leibniz_defect(const AlgebraBundle& bundle, const std::array<std::size_t, 3>& basis,
                                        const std::array<long, 3>& degrees)
{
    const std::size_t n = bundle.dim;
    auto X = LaurentElement::monomial(Vector::basis(n, basis[0]), degrees[0]);
    auto Y = LaurentElement::monomial(Vector::basis(n, basis[1]), degrees[1]);
    auto Z = LaurentElement::monomial(Vector::basis(n, basis[2]), degrees[2]);
    auto mul = [&](const LaurentElement& p, const LaurentElement& q) { return affinized_product(bundle, p, q); };
    return mul(X, mul(Y, Z)) - mul(mul(X, Y), Z) - mul(Y, mul(X, Z));
}

CheckReport windowed_leibniz_check(const AlgebraBundle& bundle, const std::vector<long>& degrees)
{
    bundle.validate();
    bundle.product("circ");
    bundle.product("vdash");
    bundle.product("dashv");
    const std::size_t n = bundle.dim;
    CheckReport report;
    for (long i : degrees)
        for (long j : degrees)
            for (long k : degrees)
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y)
                        for (std::size_t z = 0; z < n; ++z) {
                            LaurentElement d = affinized_leibniz_defect(bundle, {x, y, z}, {i, j, k});
                            if (d.is_zero())
                                continue;
                            // Report the highest nonzero coefficient.
                            auto top = std::prev(d.terms.end());
                            Counterexample c;
                            c.equation = static_cast<std::size_t>(i + j + k - top->first);
                            c.text = "affinized leibniz, coefficient of t^(i+j+k-" + std::to_string(c.equation) + ")";
                            c.variables = {'x', 'y', 'z'};
                            c.basis = {x, y, z};
                            c.defect.vector = top->second;
                            c.degrees = std::array<long, 3>{i, j, k};
                            report.holds = false;
                            report.counterexample = std::move(c);
                            return report;
                        }
    return report;
}

CheckReport leibniz_grid_check(const AlgebraBundle& bundle)
{
    return windowed_leibniz_check(bundle, {0, 1, 2});
}

} // namespace nalg
