#include "nalg/constructions.hpp"
#include "nalg/error.hpp"

namespace nalg {

namespace {

// sum_a x_a family[a]
Matrix combine(const std::vector<Matrix>& family, const Vector& x, std::size_t m)
{
    Matrix out(m, m);
    for (std::size_t a = 0; a < x.size(); ++a)
        if (!x[a].is_zero())
            out += x[a] * family[a];
    return out;
}

void require_form(const BilinearForm& w, std::size_t dim)
{
    if (w.dim() != dim)
        throw Error(ErrorKind::DimensionMismatch, "form dimension differs from algebra");
    if (!form_is_skew(w))
        throw Error(ErrorKind::NotSkew, "form is not skew-symmetric");
    if (!form_is_nondegenerate(w))
        throw Error(ErrorKind::DegenerateForm, "form is degenerate");
}

void require_anti_O_shapes(const Matrix& T, const MultTable& circ, const RepBundle& rep)
{
    rep.validate();
    if (rep.algebra_dim != circ.dim() || T.rows() != circ.dim() || T.cols() != rep.module_dim)
        throw Error(ErrorKind::DimensionMismatch, "operator, algebra and representation sizes disagree");
}

void require(bool ok, ErrorKind kind, const std::string& what, Validate v)
{
    if (v == Validate::Check && !ok)
        throw Error(kind, what);
}

// Solves w(result, e_k) = c_k for every k, i.e. gram^T result = c.
class FormSolver {
public:
    explicit FormSolver(const BilinearForm& w) : inv_(invert(w.gram.transpose())) {}
    Vector solve(const Vector& c) const { return inv_ * c; }

private:
    Matrix inv_;
};

std::vector<Vector> basis_of(std::size_t n)
{
    std::vector<Vector> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(Vector::basis(n, i));
    return out;
}

} // namespace

Matrix form_flat(const BilinearForm& w)
{
    return w.gram.transpose();
}

LeviCivita levi_civita(const MultTable& circ, const BilinearForm& w)
{
    const std::size_t n = circ.dim();
    require_form(w, n);
    FormSolver solver(w);
    const auto e = basis_of(n);
    auto m = [&](std::size_t a, std::size_t b) { return circ.product(a, b); };
    LeviCivita out{MultTable(n), MultTable(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector plus(n), minus(n);
            for (std::size_t k = 0; k < n; ++k) {
                Rational head = w(m(i, j), e[k]);
                Rational tail = w(m(j, k), e[i]) + w(m(k, j), e[i]) + w(m(i, k), e[j]);
                plus[k] = (head + tail) / 2;
                minus[k] = (head - tail) / 2;
            }
            out.lozenge.set_product(i, j, solver.solve(plus));
            out.blacklozenge.set_product(i, j, solver.solve(minus));
        }
    return out;
}

SplitPair levi_civita_from_cocycle(const MultTable& circ, const BilinearForm& w, Validate v)
{
    const std::size_t n = circ.dim();
    require_form(w, n);
    if (v == Validate::Check) {
        AlgebraBundle b(n);
        b.add("circ", circ).add("omega", w);
        require(holds("two-cocycle", b), ErrorKind::NotCocycle, "form is not a 2-cocycle", v);
    }
    FormSolver solver(w);
    const auto e = basis_of(n);
    SplitPair out{SplitFlavor::AntiPreLeibniz, MultTable(n), MultTable(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector succ(n), prec(n);
            for (std::size_t k = 0; k < n; ++k) {
                succ[k] = w(e[j], circ.product(i, k));
                prec[k] = -w(e[i], circ.product(j, k) + circ.product(k, j));
            }
            out.first.set_product(i, j, solver.solve(succ));
            out.second.set_product(i, j, solver.solve(prec));
        }
    return out;
}

bool check_anti_O(const Matrix& T, const MultTable& circ, const RepBundle& rep)
{
    require_anti_O_shapes(T, circ, rep);
    const std::size_t m = rep.module_dim;
    const auto& l = rep.family("l");
    const auto& r = rep.family("r");
    const auto f = basis_of(m);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
            Vector Tu = T.column(u), Tv = T.column(v);
            Vector lhs = multiply(circ, Tu, Tv);
            Vector rhs = -(T * (combine(l, Tu, m) * f[v] + combine(r, Tv, m) * f[u]));
            if (!(lhs == rhs))
                return false;
        }
    return true;
}

bool check_strong_anti_O(const Matrix& T, const MultTable& circ, const RepBundle& rep)
{
    require_anti_O_shapes(T, circ, rep);
    const std::size_t m = rep.module_dim;
    const auto& l = rep.family("l");
    const auto& r = rep.family("r");
    const auto f = basis_of(m);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t w = 0; w < m; ++w) {
                Vector Tu = T.column(u), Tv = T.column(v), Tw = T.column(w);
                Vector d = combine(l, multiply(circ, Tu, Tv), m) * f[w] + combine(r, multiply(circ, Tu, Tw), m) * f[v]
                           - combine(r, multiply(circ, Tv, Tw), m) * f[u];
                if (!d.is_zero())
                    return false;
            }
    return true;
}

SplitPair induced_split(const Matrix& T, const MultTable& circ, const RepBundle& rep, Validate v)
{
    require_anti_O_shapes(T, circ, rep);
    if (v == Validate::Check)
        require(check_anti_O(T, circ, rep), ErrorKind::NotAntiO, "operator is not an anti-O-operator", v);
    const std::size_t m = rep.module_dim;
    const auto& l = rep.family("l");
    const auto& r = rep.family("r");
    const auto f = basis_of(m);
    SplitPair out{SplitFlavor::AntiPreLeibniz, MultTable(m), MultTable(m)};
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t w = 0; w < m; ++w) {
            out.first.set_product(u, w, -(combine(l, T.column(u), m) * f[w]));
            out.second.set_product(u, w, -(combine(r, T.column(w), m) * f[u]));
        }
    return out;
}

SplitPair compatible_split_from_invertible_anti_O(const Matrix& T, const MultTable& circ, const RepBundle& rep,
                                                  Validate v)
{
    require_anti_O_shapes(T, circ, rep);
    const Matrix Tinv = invert(T);
    if (v == Validate::Check)
        require(check_anti_O(T, circ, rep), ErrorKind::NotAntiO, "operator is not an anti-O-operator", v);
    const std::size_t n = circ.dim();
    const auto& l = rep.family("l");
    const auto& r = rep.family("r");
    SplitPair out{SplitFlavor::AntiPreLeibniz, MultTable(n), MultTable(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out.first.set_product(i, j, -(T * (l[i] * Tinv.column(j))));
            out.second.set_product(i, j, -(T * (r[j] * Tinv.column(i))));
        }
    return out;
}

RepBundle coadjoint_rep(const MultTable& circ)
{
    return dual_leibniz_rep(adjoint_rep(circ));
}

MultTable perm_to_leibniz(const MultTable& star, const Matrix& P, OperatorMode mode, Validate v)
{
    const std::size_t n = star.dim();
    AlgebraBundle b(n);
    b.add("star", star).add("P", LinearEndo(P));
    if (v == Validate::Check) {
        require(holds("perm", b), ErrorKind::NotPerm, "product is not a perm algebra", v);
        const char* system = mode == OperatorMode::Averaging ? "averaging" : "derivation";
        require(holds(system, b), ErrorKind::OperatorAxiomFails,
                std::string("map is not ") + (mode == OperatorMode::Averaging ? "an averaging operator" : "a derivation"), v);
    }
    return MultTable::from_rule(n, [&](std::size_t i, std::size_t j) {
        const Vector ei = Vector::basis(n, i), ej = Vector::basis(n, j);
        return multiply(star, P.column(i), ej) - multiply(star, ei, P.column(j));
    });
}

SplitPair minus2_transform(const SplitPair& nd)
{
    const MultTable flipped = table_flip(nd.second);
    return SplitPair{SplitFlavor::AntiPreLeibniz, table_combine(1, nd.first, 2, flipped),
                     table_combine(-1, flipped, -2, nd.first)};
}

SplitPair plus2_transform(const SplitPair& apl)
{
    return SplitPair{SplitFlavor::NovikovDialgebra, table_combine(1, apl.first, 2, apl.second),
                     table_combine(-1, table_flip(apl.second), -2, table_flip(apl.first))};
}

SplitPair transformed_from_pre(const SplitPair& pre)
{
    return SplitPair{SplitFlavor::Transformed, pre.first, table_scale(table_flip(pre.second), -1)};
}

SplitPair pre_from_transformed(const SplitPair& transformed)
{
    return SplitPair{SplitFlavor::PreLeibniz, transformed.first, table_scale(table_flip(transformed.second), -1)};
}

RepBundle apl_twisted_dual_rep(const SplitPair& s)
{
    const std::size_t n = s.dim();
    return make_rep(
        n, n,
        {{"l", [&](std::size_t t) { return -dualize_endo(mult_operator(s.first, Side::Left, t)); }},
         {"r", [&](std::size_t t) {
              return dualize_endo(mult_operator(s.first, Side::Left, t)) + dualize_endo(mult_operator(s.second, Side::Right, t));
          }}});
}

RepBundle pre_twisted_dual_rep(const SplitPair& s)
{
    const std::size_t n = s.dim();
    return make_rep(
        n, n,
        {{"l", [&](std::size_t t) { return dualize_endo(mult_operator(s.first, Side::Left, t)); }},
         {"r", [&](std::size_t t) {
              return -dualize_endo(mult_operator(s.first, Side::Left, t)) - dualize_endo(mult_operator(s.second, Side::Right, t));
          }}});
}

DoubleStructures double_structures_apl(const SplitPair& apl, Validate v)
{
    const SplitPair s{SplitFlavor::AntiPreLeibniz, apl.first, apl.second};
    if (v == Validate::Check)
        require(holds("anti-pre-leibniz", s.to_bundle()), ErrorKind::NotAntiPreLeibniz,
                "pair is not an anti-pre-Leibniz algebra", v);
    const MultTable circ = s.sub_adjacent();
    return DoubleStructures{semidirect_leibniz(circ, apl_twisted_dual_rep(s)), semidirect_leibniz(circ, coadjoint_rep(circ))};
}

DoubleStructures double_structures_pre(const SplitPair& pre, Validate v)
{
    const SplitPair s{SplitFlavor::PreLeibniz, pre.first, pre.second};
    if (v == Validate::Check)
        require(holds("pre-leibniz", s.to_bundle()), ErrorKind::NotPreLeibniz, "pair is not a pre-Leibniz algebra", v);
    const MultTable bullet = s.sub_adjacent();
    return DoubleStructures{semidirect_leibniz(bullet, pre_twisted_dual_rep(s)), semidirect_leibniz(bullet, coadjoint_rep(bullet))};
}

BilinearForm omega_p(std::size_t n)
{
    if (n == 0)
        throw Error(ErrorKind::DimensionMismatch, "omega_p needs n >= 1");
    Matrix g(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, n + i) = 1;
        g(n + i, i) = -1;
    }
    return BilinearForm(std::move(g));
}

AlgebraBundle gd_from_novikov_di(const SplitPair& nd, Validate v)
{
    const SplitPair s{SplitFlavor::NovikovDialgebra, nd.first, nd.second};
    AlgebraBundle b = s.to_bundle();
    if (v == Validate::Check)
        require(holds("novikov-dialgebra", b), ErrorKind::NotNovikovDialgebra, "pair is not a Novikov dialgebra", v);
    b.add("circ", s.sub_adjacent());
    return b;
}

AlgebraBundle gd_from_averaging(const MultTable& bracket, const MultTable& ast, const Matrix& P, Validate v)
{
    const std::size_t n = bracket.dim();
    AlgebraBundle in(n);
    in.add("bracket", bracket).add("ast", ast).add("P", LinearEndo(P));
    if (v == Validate::Check) {
        require(holds("gd-algebra", in), ErrorKind::NotGDAlgebra, "input is not a GD algebra", v);
        require(holds("averaging", in), ErrorKind::OperatorAxiomFails, "map is not an averaging operator", v);
    }
    AlgebraBundle out(n);
    out.add("circ", MultTable::from_rule(n, [&](std::size_t i, std::size_t j) {
        return multiply(bracket, P.column(i), Vector::basis(n, j));
    }));
    out.add("vdash", MultTable::from_rule(n, [&](std::size_t i, std::size_t j) {
        return multiply(ast, P.column(i), Vector::basis(n, j));
    }));
    out.add("dashv", MultTable::from_rule(n, [&](std::size_t i, std::size_t j) {
        return multiply(ast, Vector::basis(n, i), P.column(j));
    }));
    return out;
}

MultTable derivation_product(const AlgebraBundle& gd, const Matrix& P, Validate v)
{
    const std::size_t n = gd.dim;
    const MultTable& circ = gd.product("circ");
    const MultTable& vdash = gd.product("vdash");
    const MultTable& dashv = gd.product("dashv");
    if (v == Validate::Check) {
        AlgebraBundle b(n);
        b.add("circ", circ).add("vdash", vdash).add("dashv", dashv).add("P", LinearEndo(P));
        require(holds("gd-dialgebra", b), ErrorKind::NotGDDialgebra, "input is not a GD dialgebra", v);
        require(holds("derivation", b), ErrorKind::OperatorAxiomFails, "map is not a derivation of every product", v);
    }
    return MultTable::from_rule(n, [&](std::size_t i, std::size_t j) {
        const Vector ei = Vector::basis(n, i), ej = Vector::basis(n, j);
        return circ.product(i, j) + multiply(vdash, P.column(i), ej) - multiply(dashv, P.column(j), ei);
    });
}

namespace {

// Nullspace of the linear condition "system holds" over the span of the
// given candidate structures.
std::vector<Matrix> solve_conditions(const std::vector<Matrix>& candidates,
                                     const std::function<std::vector<Rational>(const Matrix&)>& defects)
{
    if (candidates.empty())
        return {};
    std::vector<std::vector<Rational>> cols;
    for (const auto& c : candidates)
        cols.push_back(defects(c));
    Matrix m(cols.front().size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < cols[c].size(); ++r)
            m(r, c) = cols[c][r];
    std::vector<Matrix> out;
    for (const auto& v : nullspace(m)) {
        Matrix s(candidates.front().rows(), candidates.front().cols());
        for (std::size_t c = 0; c < candidates.size(); ++c)
            if (!v[c].is_zero())
                s += v[c] * candidates[c];
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

std::vector<Matrix> skew_cocycle_basis(const MultTable& circ)
{
    const std::size_t n = circ.dim();
    std::vector<Matrix> candidates;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Matrix e(n, n);
            e(a, b) = 1;
            e(b, a) = -1;
            candidates.push_back(std::move(e));
        }
    const IdentitySystem& sys = registry("two-cocycle");
    return solve_conditions(candidates, [&](const Matrix& g) {
        AlgebraBundle b(n);
        b.add("circ", circ).add("omega", BilinearForm(g));
        return defect_coordinates(sys, b);
    });
}

std::vector<Matrix> derivation_basis(const AlgebraBundle& bundle, const std::vector<std::string>& products)
{
    const std::size_t n = bundle.dim;
    std::vector<Matrix> candidates;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Matrix e(n, n);
            e(a, b) = 1;
            candidates.push_back(std::move(e));
        }
    AlgebraBundle base(n);
    base.products = bundle.products;
    const IdentitySystem sys = instantiate(registry("derivation"), base, products);
    return solve_conditions(candidates, [&](const Matrix& p) {
        AlgebraBundle b = base;
        b.add("P", LinearEndo(p));
        return defect_coordinates(sys, b);
    });
}

} // namespace nalg
