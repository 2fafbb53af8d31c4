#include "nalg/generators.hpp"
#include "nalg/constructions.hpp"
#include "nalg/error.hpp"
#include "nalg/representations.hpp"

namespace nalg {

namespace {

// Products given as (i, j, k) triples with coefficient 1.
MultTable table_of(std::size_t n, std::initializer_list<std::array<std::size_t, 3>> entries)
{
    MultTable t(n);
    for (const auto& e : entries)
        t(e[0], e[1], e[2]) = 1;
    return t;
}

std::vector<MultTable> commutative_associative_list(std::size_t max_dim)
{
    std::vector<MultTable> all = {
        table_of(1, {{0, 0, 0}}),
        table_of(2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}}),                   // K[x]/(x^2)
        table_of(2, {{0, 0, 0}, {1, 1, 1}}),                              // K + K
        table_of(2, {{0, 0, 1}}),                                         // x, x^2
        table_of(3, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {0, 2, 2}, {2, 0, 2}, {1, 1, 2}}), // K[x]/(x^3)
        table_of(3, {{0, 0, 1}, {0, 1, 2}, {1, 0, 2}}),                   // x, x^2, x^3
        table_of(3, {{0, 0, 0}, {1, 1, 1}, {1, 2, 2}, {2, 1, 2}}),        // K + K[x]/(x^2)
        table_of(3, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {0, 2, 2}, {2, 0, 2}}), // K[x,y]/(x,y)^2
    };
    std::vector<MultTable> out;
    for (auto& t : all)
        if (t.dim() <= max_dim)
            out.push_back(std::move(t));
    return out;
}

MultTable f_perm(Rng& rng, std::size_t n)
{
    Vector f(n);
    while (f.is_zero())
        for (std::size_t i = 0; i < n; ++i)
            f[i] = rng.uniform(-1, 1);
    MultTable t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t(i, j, j) = f[i];
    return t;
}

// (a (x) u)(b (x) v) = ab (x) uv, basis index a * dim(second) + u.
MultTable tensor(const MultTable& a, const MultTable& b)
{
    const std::size_t p = a.dim(), q = b.dim();
    MultTable out(p * q);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t k = 0; k < p; ++k) {
                if (a(i, j, k).is_zero())
                    continue;
                for (std::size_t u = 0; u < q; ++u)
                    for (std::size_t v = 0; v < q; ++v)
                        for (std::size_t w = 0; w < q; ++w)
                            if (!b(u, v, w).is_zero())
                                out(i * q + u, j * q + v, k * q + w) = a(i, j, k) * b(u, v, w);
            }
    return out;
}

std::size_t pick_dim(Rng& rng, std::size_t max_dim)
{
    return static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_dim)));
}

struct NovikovSeed {
    MultTable dot;
    Matrix D;
    MultTable ast;
};

NovikovSeed novikov_seed(Rng& rng, std::size_t max_dim)
{
    MultTable dot = random_commutative_associative(rng, max_dim);
    AlgebraBundle b(dot.dim());
    b.add("dot", dot);
    Matrix D = random_derivation(rng, b);
    const std::size_t n = dot.dim();
    MultTable ast = MultTable::from_rule(n, [&](std::size_t i, std::size_t j) {
        return multiply(dot, Vector::basis(n, i), D.column(j));
    });
    return {dot, D, ast};
}

// Two-dimensional pairs with two or three structure constants in {-1, 1}
// that satisfy the anti-pre-Leibniz identities. Admissible and
// non-admissible ones both occur.
const std::vector<SplitPair>& sparse_anti_pre_leibniz()
{
    static const std::vector<SplitPair> list = [] {
        std::vector<SplitPair> out;
        constexpr int slots = 16;
        auto consider = [&](const std::vector<std::pair<int, int>>& entries) {
            MultTable succ(2), prec(2);
            for (auto [pos, value] : entries) {
                MultTable& t = pos < 8 ? succ : prec;
                const int r = pos % 8;
                t(static_cast<std::size_t>(r / 4), static_cast<std::size_t>((r / 2) % 2), static_cast<std::size_t>(r % 2)) = value;
            }
            SplitPair sp{SplitFlavor::AntiPreLeibniz, succ, prec};
            if (holds("anti-pre-leibniz", sp.to_bundle()))
                out.push_back(std::move(sp));
        };
        auto sign = [](int mask, int bit) { return (mask >> bit) & 1 ? 1 : -1; };
        for (int a = 0; a < slots; ++a)
            for (int b = a + 1; b < slots; ++b) {
                for (int m = 0; m < 4; ++m)
                    consider({{a, sign(m, 0)}, {b, sign(m, 1)}});
                for (int c = b + 1; c < slots; ++c)
                    for (int m = 0; m < 8; ++m)
                        consider({{a, sign(m, 0)}, {b, sign(m, 1)}, {c, sign(m, 2)}});
            }
        return out;
    }();
    return list;
}

} // namespace

MultTable random_commutative_associative(Rng& rng, std::size_t max_dim)
{
    const auto list = commutative_associative_list(std::max<std::size_t>(max_dim, 1));
    const MultTable& t = rng.pick(list);
    return transport(t, random_invertible(rng, t.dim()));
}

MultTable random_perm(Rng& rng, std::size_t max_dim)
{
    MultTable t;
    if (max_dim >= 2 && rng.chance(1, 3)) {
        MultTable c = rng.pick(commutative_associative_list(max_dim / 2));
        t = tensor(c, f_perm(rng, static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_dim / c.dim())))));
    } else {
        t = f_perm(rng, pick_dim(rng, max_dim));
    }
    return transport(t, random_invertible(rng, t.dim()));
}

MultTable random_associative(Rng& rng, std::size_t max_dim)
{
    std::vector<MultTable> options;
    // upper triangular 2x2 matrices on E11, E12, E22
    if (max_dim >= 3)
        options.push_back(table_of(3, {{0, 0, 0}, {0, 1, 1}, {1, 2, 1}, {2, 2, 2}}));
    options.push_back(random_perm(rng, max_dim));
    options.push_back(table_flip(random_perm(rng, max_dim)));
    options.push_back(random_commutative_associative(rng, max_dim));
    const MultTable& t = rng.pick(options);
    return transport(t, random_invertible(rng, t.dim()));
}

Matrix random_derivation(Rng& rng, const AlgebraBundle& b)
{
    auto basis = derivation_basis(b);
    if (basis.empty())
        return Matrix(b.dim, b.dim);
    return random_combination(rng, basis);
}

MultTable random_novikov(Rng& rng, std::size_t max_dim)
{
    return novikov_seed(rng, max_dim).ast;
}

SplitPair random_novikov_dialgebra(Rng& rng, std::size_t max_dim)
{
    NovikovSeed s = novikov_seed(rng, max_dim);
    const std::size_t n = s.dot.dim();
    if (rng.chance(1, 2))
        return SplitPair{SplitFlavor::NovikovDialgebra, s.ast, s.ast};

    // P = multiplication by an element a with D(a) = 0 averages x.D(y).
    auto kernel = nullspace(s.D);
    Vector a(n);
    for (const auto& k : kernel)
        a.axpy(rng.uniform(-2, 2), k);
    Matrix P(n, n);
    for (std::size_t i = 0; i < n; ++i)
        P += a[i] * mult_operator(s.dot, Side::Left, i);
    MultTable vdash = MultTable::from_rule(n, [&](std::size_t i, std::size_t j) {
        return multiply(s.ast, P.column(i), Vector::basis(n, j));
    });
    MultTable dashv = MultTable::from_rule(n, [&](std::size_t i, std::size_t j) {
        return multiply(s.ast, Vector::basis(n, i), P.column(j));
    });
    return SplitPair{SplitFlavor::NovikovDialgebra, std::move(vdash), std::move(dashv)};
}

MultTable random_leibniz(Rng& rng, std::size_t max_dim)
{
    switch (rng.uniform(0, 3)) {
    case 0: {
        MultTable star = random_perm(rng, max_dim);
        AlgebraBundle b(star.dim());
        b.add("star", star);
        return perm_to_leibniz(star, random_derivation(rng, b), OperatorMode::Derivation, Validate::Skip);
    }
    case 1:
        return random_novikov_dialgebra(rng, max_dim).sub_adjacent();
    case 2:
        return random_anti_pre_leibniz(rng, max_dim).sub_adjacent();
    default: {
        const MultTable circ = random_novikov_dialgebra(rng, std::max<std::size_t>(max_dim / 2, 1)).sub_adjacent();
        return semidirect_leibniz(circ, adjoint_rep(circ));
    }
    }
}

AlgebraBundle random_cocycle_instance(Rng& rng, std::size_t max_dim)
{
    const std::size_t half = std::max<std::size_t>(max_dim / 2, 1);
    if (rng.chance(1, 2)) {
        // a nondegenerate element of the cocycle space of an even-dimensional Leibniz algebra
        for (int attempt = 0; attempt < 8; ++attempt) {
            MultTable circ = random_leibniz(rng, max_dim);
            if (circ.dim() % 2 != 0)
                continue;
            auto basis = skew_cocycle_basis(circ);
            if (basis.empty())
                continue;
            BilinearForm w(random_combination(rng, basis));
            if (!form_is_nondegenerate(w))
                continue;
            AlgebraBundle b(circ.dim());
            b.add("circ", circ).add("omega", w);
            return b;
        }
    }
    SplitPair apl = transport(rng.pick(sparse_anti_pre_leibniz()), random_invertible(rng, 2));
    if (half == 1 || rng.chance(1, 2))
        apl = minus2_transform(random_novikov_dialgebra(rng, half));
    AlgebraBundle b(2 * apl.dim());
    b.add("circ", semidirect_leibniz(apl.sub_adjacent(), apl_twisted_dual_rep(apl))).add("omega", omega_p(apl.dim()));
    return b;
}

SplitPair random_anti_pre_leibniz(Rng& rng, std::size_t max_dim)
{
    switch (rng.uniform(0, max_dim >= 4 ? 4 : 2)) {
    case 0:
        return minus2_transform(random_novikov_dialgebra(rng, max_dim));
    case 1:
        return transport(rng.pick(sparse_anti_pre_leibniz()), random_invertible(rng, 2));
    case 2:
        if (max_dim >= 2) {
            const AlgebraBundle b = random_cocycle_instance(rng, max_dim - max_dim % 2);
            return levi_civita_from_cocycle(b.product("circ"), b.form("omega"), Validate::Skip);
        }
        return minus2_transform(random_novikov_dialgebra(rng, max_dim));
    case 3: {
        const SplitPair s = random_anti_pre_leibniz(rng, max_dim / 2);
        return semidirect_apl(s, apl_adjoint_rep(s));
    }
    default: {
        const SplitPair s = random_anti_pre_leibniz(rng, max_dim / 2);
        return semidirect_apl(s, dual_apl_rep(apl_adjoint_rep(s)));
    }
    }
}

SplitPair random_pre_leibniz(Rng& rng, std::size_t max_dim)
{
    if (rng.chance(1, 2))
        return pre_from_transformed(random_novikov_dialgebra(rng, max_dim));
    const MultTable dot = random_associative(rng, max_dim);
    return SplitPair{SplitFlavor::PreLeibniz, dot, table_scale(table_flip(dot), -1)};
}

AlgebraBundle random_gd_dialgebra(Rng& rng, std::size_t max_dim)
{
    if (rng.chance(1, 2))
        return gd_from_novikov_di(random_novikov_dialgebra(rng, max_dim), Validate::Skip);

    // commutator GD algebra of x . D(y), averaged by multiplication with a in ker D
    NovikovSeed s = novikov_seed(rng, max_dim);
    const std::size_t n = s.dot.dim();
    const MultTable bracket = table_combine(1, s.ast, -1, table_flip(s.ast));
    Vector a(n);
    for (const auto& k : nullspace(s.D))
        a.axpy(rng.uniform(-2, 2), k);
    Matrix P(n, n);
    for (std::size_t i = 0; i < n; ++i)
        P += a[i] * mult_operator(s.dot, Side::Left, i);
    return gd_from_averaging(bracket, s.ast, P, Validate::Skip);
}

} // namespace nalg
