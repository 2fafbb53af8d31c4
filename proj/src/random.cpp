#include "nalg/random.hpp"
#include "nalg/error.hpp"

namespace nalg {

long Rng::uniform(long lo, long hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
}

bool Rng::chance(unsigned num, unsigned den)
{
    return gen_() % den < num;
}

MultTable random_table(Rng& rng, std::size_t n, unsigned density_percent, long lo, long hi)
{
    MultTable t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (rng.chance(density_percent, 100))
                    t(i, j, k) = rng.uniform(lo, hi);
    return t;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi)
{
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rng.uniform(lo, hi);
    return m;
}

Matrix random_invertible(Rng& rng, std::size_t n)
{
    Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (r > c)
                lower(r, c) = rng.uniform(-1, 1);
            else if (r < c)
                upper(r, c) = rng.uniform(-1, 1);
            else
                upper(r, c) = rng.chance(1, 2) ? 1 : -1;
        }
    return lower * upper;
}

Matrix random_combination(Rng& rng, const std::vector<Matrix>& basis)
{
    if (basis.empty())
        return {};
    Matrix out(basis.front().rows(), basis.front().cols());
    bool any = false;
    for (const auto& b : basis) {
        long c = rng.uniform(-2, 2);
        if (c != 0) {
            out += Rational(c) * b;
            any = true;
        }
    }
    if (!any)
        out += basis[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(basis.size()) - 1))];
    return out;
}

MultTable transport(const MultTable& t, const Matrix& g)
{
    const std::size_t n = t.dim();
    if (g.rows() != n || g.cols() != n)
        throw Error(ErrorKind::DimensionMismatch, "basis change has the wrong size");
    const Matrix ginv = invert(g);
    return MultTable::from_rule(n, [&](std::size_t i, std::size_t j) {
        return ginv * multiply(t, g.column(i), g.column(j));
    });
}

SplitPair transport(const SplitPair& s, const Matrix& g)
{
    return SplitPair{s.flavor, transport(s.first, g), transport(s.second, g)};
}

AlgebraBundle transport(const AlgebraBundle& b, const Matrix& g)
{
    const Matrix ginv = invert(g);
    AlgebraBundle out(b.dim);
    for (const auto& [name, t] : b.products)
        out.add(name, transport(t, g));
    for (const auto& [name, w] : b.forms)
        out.add(name, BilinearForm(g.transpose() * w.gram * g));
    for (const auto& [name, m] : b.maps)
        out.add(name, LinearEndo(ginv * m.matrix * g));
    return out;
}

MultTable mutate(Rng& rng, const MultTable& t)
{
    MultTable out = t;
    const long n = static_cast<long>(t.dim());
    const auto i = static_cast<std::size_t>(rng.uniform(0, n - 1));
    const auto j = static_cast<std::size_t>(rng.uniform(0, n - 1));
    const auto k = static_cast<std::size_t>(rng.uniform(0, n - 1));
    out(i, j, k) += rng.chance(1, 2) ? 1 : -1;
    return out;
}

} // namespace nalg
