#include "nalg/representations.hpp"
#include "nalg/error.hpp"

namespace nalg {

RepBundle make_rep(std::size_t algebra_dim, std::size_t module_dim,
                   const std::vector<std::pair<std::string, std::function<Matrix(std::size_t)>>>& families)
{
    RepBundle rep;
    rep.algebra_dim = algebra_dim;
    rep.module_dim = module_dim;
    for (const auto& [name, f] : families) {
        auto& mats = rep.maps[name];
        for (std::size_t t = 0; t < algebra_dim; ++t)
            mats.push_back(f(t));
    }
    rep.validate();
    return rep;
}

RepBundle adjoint_rep(const MultTable& t)
{
    return make_rep(t.dim(), t.dim(),
                    {{"l", [&](std::size_t i) { return mult_operator(t, Side::Left, i); }},
                     {"r", [&](std::size_t i) { return mult_operator(t, Side::Right, i); }}});
}

RepBundle dual_leibniz_rep(const RepBundle& rep)
{
    const auto& l = rep.family("l");
    const auto& r = rep.family("r");
    return make_rep(rep.algebra_dim, rep.module_dim,
                    {{"l", [&](std::size_t t) { return dualize_endo(l[t]); }},
                     {"r", [&](std::size_t t) { return -dualize_endo(l[t]) - dualize_endo(r[t]); }}});
}

RepBundle apl_adjoint_rep(const SplitPair& s)
{
    const MultTable& succ = s.first;
    const MultTable& prec = s.second;
    return make_rep(s.dim(), s.dim(),
                    {{"l_succ", [&](std::size_t i) { return mult_operator(succ, Side::Left, i); }},
                     {"r_succ", [&](std::size_t i) { return mult_operator(succ, Side::Right, i); }},
                     {"l_prec", [&](std::size_t i) { return mult_operator(prec, Side::Left, i); }},
                     {"r_prec", [&](std::size_t i) { return mult_operator(prec, Side::Right, i); }}});
}

RepBundle dual_apl_rep(const RepBundle& rep)
{
    const auto& ls = rep.family("l_succ");
    const auto& rs = rep.family("r_succ");
    const auto& lp = rep.family("l_prec");
    const auto& rp = rep.family("r_prec");
    return make_rep(rep.algebra_dim, rep.module_dim,
                    {{"l_succ", [&](std::size_t t) { return -dualize_endo(ls[t] + lp[t]); }},
                     {"r_succ", [&](std::size_t t) { return -dualize_endo(lp[t]) - dualize_endo(rs[t]); }},
                     {"l_prec", [&](std::size_t t) { return dualize_endo(lp[t]); }},
                     {"r_prec", [&](std::size_t t) { return dualize_endo(ls[t] + lp[t] + rs[t] + rp[t]); }}});
}

namespace {

MultTable semidirect(const MultTable& a, const std::vector<Matrix>& l, const std::vector<Matrix>& r, std::size_t m)
{
    const std::size_t n = a.dim();
    MultTable out(n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out(i, j, k) = a(i, j, k);
    // e_i * f_b = l(e_i) f_b; f_b * e_j = r(e_j) f_b.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) {
                out(i, n + b, n + c) = l[i](c, b);
                out(n + b, i, n + c) = r[i](c, b);
            }
    return out;
}

void check_dims(const MultTable& a, const RepBundle& rep)
{
    if (rep.algebra_dim != a.dim())
        throw Error(ErrorKind::DimensionMismatch, "representation acts on an algebra of a different dimension");
    rep.validate();
}

} // namespace

MultTable semidirect_leibniz(const MultTable& circ, const RepBundle& rep)
{
    check_dims(circ, rep);
    return semidirect(circ, rep.family("l"), rep.family("r"), rep.module_dim);
}

SplitPair semidirect_apl(const SplitPair& s, const RepBundle& rep)
{
    check_dims(s.first, rep);
    return SplitPair{s.flavor,
                     semidirect(s.first, rep.family("l_succ"), rep.family("r_succ"), rep.module_dim),
                     semidirect(s.second, rep.family("l_prec"), rep.family("r_prec"), rep.module_dim)};
}

CheckReport check_leibniz_rep(const MultTable& circ, const RepBundle& rep)
{
    AlgebraBundle b(circ.dim() + rep.module_dim);
    b.add("circ", semidirect_leibniz(circ, rep));
    return check_system("leibniz", b);
}

CheckReport check_apl_rep(const SplitPair& s, const RepBundle& rep)
{
    SplitPair sd = semidirect_apl(SplitPair{SplitFlavor::AntiPreLeibniz, s.first, s.second}, rep);
    return check_system("anti-pre-leibniz", sd.to_bundle());
}

bool check_rep_equivalence(const RepBundle& rep1, const RepBundle& rep2, const Matrix& phi)
{
    rep1.validate();
    rep2.validate();
    if (rep1.algebra_dim != rep2.algebra_dim || phi.rows() != rep2.module_dim || phi.cols() != rep1.module_dim)
        throw Error(ErrorKind::DimensionMismatch, "representations and map have inconsistent sizes");
    if (!phi.is_square() || rank(phi) != phi.rows())
        throw Error(ErrorKind::SingularMatrix, "equivalence map is not invertible");
    if (rep1.maps.size() != rep2.maps.size())
        throw Error(ErrorKind::DimensionMismatch, "representations have different map families");
    for (const auto& [name, mats] : rep1.maps) {
        const auto& other = rep2.family(name);
        for (std::size_t t = 0; t < rep1.algebra_dim; ++t)
            if (!(phi * mats[t] == other[t] * phi))
                return false;
    }
    return true;
}

} // namespace nalg
