#include "nalg/generators.hpp"
#include "nalg/identity.hpp"
#include "nalg/random.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace nalg;
using namespace nalg::testing;

namespace {

Vector random_vector(Rng& rng, std::size_t n)
{
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = Rational(rng.uniform(-5, 5), rng.uniform(1, 4));
    return v;
}

// Evaluates every equation of sys at random (non-basis) vectors and reports
// whether some defect is nonzero.
bool spot_violation(const IdentitySystem& sys, const AlgebraBundle& bundle, Rng& rng, int rounds)
{
    const AlgebraBundle full = with_derived(sys, bundle);
    for (int r = 0; r < rounds; ++r)
        for (const auto& eq : sys.equations) {
            Assignment values;
            for (char v : eq.variables)
                values[v] = random_vector(rng, bundle.dim);
            if (!equation_defect(eq, full, values).is_zero())
                return true;
        }
    return false;
}

} // namespace

TEST(EvaluateTerm, Examples)
{
    const AlgebraBundle b = bundle_of("leib2");
    const Assignment xy = {{'x', e(2, 0)}, {'y', e(2, 0)}};
    const Term xy_prod = Term::product("circ", Term::variable('x'), Term::variable('y'));
    EXPECT_EQ(evaluate_term(xy_prod, b, xy), e(2, 1));
    EXPECT_TRUE(evaluate_term(Term::scale(0, xy_prod), b, xy).is_zero());
    EXPECT_TRUE(evaluate_term(Term::sum({xy_prod, Term::scale(-1, xy_prod)}), b, xy).is_zero());
}

TEST(EvaluateTerm, Errors)
{
    const AlgebraBundle b = bundle_of("leib2");
    const Term t = Term::product("succ", Term::variable('x'), Term::variable('y'));
    EXPECT_EQ(kind_of([&] { evaluate_term(t, b, {{'x', e(2, 0)}, {'y', e(2, 0)}}); }), ErrorKind::UnknownName);
    const Term u = Term::product("circ", Term::variable('x'), Term::variable('z'));
    EXPECT_EQ(kind_of([&] { evaluate_term(u, b, {{'x', e(2, 0)}}); }), ErrorKind::UnassignedVariable);
    EXPECT_EQ(kind_of([&] { evaluate_term(u, b, {{'x', e(3, 0)}, {'z', e(2, 0)}}); }), ErrorKind::DimensionMismatch);
}

TEST(Parser, VectorEquation)
{
    const Equation eq = parse_equation("circ(x,circ(y,z)) = 1/2*circ(circ(x,y),z) - 3*P(y) + 0");
    EXPECT_EQ(eq.kind, Equation::Kind::Vector);
    EXPECT_EQ(eq.variables, (std::vector<char>{'x', 'y', 'z'}));
}

TEST(Parser, FormEquationAndVariableOrder)
{
    const Equation eq = parse_equation("omega(w,circ(x,y)) = -omega(x,w)", {"omega"});
    EXPECT_EQ(eq.kind, Equation::Kind::Form);
    EXPECT_EQ(eq.form, "omega");
    EXPECT_EQ(eq.variables, (std::vector<char>{'x', 'y', 'w'}));
}

TEST(Parser, RejectsMalformedText)
{
    for (const char* bad : {"circ(x,y)", "circ(x,y) = ", "circ(x,,y) = 0", "circ(x,y = 0", "circ(x,q) = 0", "= 0",
                            "circ(x,y) = 0 = 0", "1/0*x = x"})
        EXPECT_EQ(kind_of([&] { parse_equation(bad); }), ErrorKind::ParseError) << bad;
}

TEST(Registry, Shapes)
{
    const IdentitySystem& leibniz = registry("leibniz");
    ASSERT_EQ(leibniz.equations.size(), 1u);
    EXPECT_EQ(leibniz.equations[0].variables.size(), 3u);
    EXPECT_EQ(registry("novikov-dialgebra").equations.size(), 6u);
    EXPECT_EQ(registry("anti-pre-leibniz").equations.size(), 4u);
    EXPECT_EQ(registry("admissible-novikov-dialgebra").equations.size(), 6u);
    EXPECT_EQ(registry("transformed-pre-leibniz").equations.size(), 3u);
    EXPECT_EQ(registry("compatible-leibniz").equations.size(), 3u);
    EXPECT_EQ(kind_of([] { registry("nope"); }), ErrorKind::UnknownSystem);
    for (const auto& name : registry_names())
        EXPECT_FALSE(registry(name).equations.empty()) << name;
}

TEST(CheckSystem, Leib2AndMutation)
{
    AlgebraBundle b = bundle_of("leib2");
    EXPECT_TRUE(check_system("leibniz", b).holds);

    MultTable mutated = b.product("circ");
    mutated(1, 0, 0) = 1; // e2 circ e1 = e1
    AlgebraBundle bad(2);
    bad.add("circ", mutated);
    const CheckReport r = check_system("leibniz", bad);
    ASSERT_FALSE(r.holds);
    ASSERT_TRUE(r.counterexample.has_value());
    EXPECT_EQ(r.counterexample->equation, 0u);
    EXPECT_EQ(r.counterexample->basis, (std::vector<std::size_t>{0, 0, 0}));
    EXPECT_EQ(r.counterexample->defect.to_json(), nlohmann::json::parse(R"(["-1","0"])"));
    EXPECT_EQ(r.to_json().dump(), check_system("leibniz", bad).to_json().dump());
}

TEST(CheckSystem, MissingProductIsUnknownName)
{
    EXPECT_EQ(kind_of([] { check_system("anti-pre-leibniz", bundle_of("leib2")); }), ErrorKind::UnknownName);
}

TEST(CheckSystem, FormEquations)
{
    const AlgebraBundle b = bundle_of("omega2-on-leib2");
    EXPECT_TRUE(holds("two-cocycle", b));
    const CheckReport r = check_system("quadratic-leibniz-invariance", b);
    ASSERT_FALSE(r.holds);
    EXPECT_TRUE(r.counterexample->defect.scalar.has_value());
}

TEST(CheckSystem, RenameAndInstantiate)
{
    const AlgebraBundle b = bundle_of("gd-deriv2");
    const IdentitySystem sys = rename_system(registry("leibniz"), {{"circ", "dot"}});
    EXPECT_TRUE(check_system(sys, b).holds);
    const IdentitySystem der = instantiate(registry("derivation"), b, {"circ", "vdash", "dashv"});
    EXPECT_EQ(der.equations.size(), 3u);
    EXPECT_TRUE(check_system(der, b).holds);
}

TEST(IdentityProperties, AlternativeAntiPreLeibnizAxiomsAgree)
{
    Rng rng(17);
    int positives = 0;
    for (int trial = 0; trial < 80; ++trial) {
        SplitPair s = trial % 2 == 0 ? random_anti_pre_leibniz(rng, 3) : SplitPair{};
        if (trial % 2 == 1) {
            const auto n = static_cast<std::size_t>(rng.uniform(1, 2));
            s = SplitPair{SplitFlavor::AntiPreLeibniz, random_table(rng, n, 30), random_table(rng, n, 30)};
        } else if (trial % 4 == 0) {
            s.first = mutate(rng, s.first);
        }
        const bool a = holds("anti-pre-leibniz", s.to_bundle());
        EXPECT_EQ(a, holds("anti-pre-leibniz-alt", s.to_bundle()));
        positives += a ? 1 : 0;
    }
    EXPECT_GT(positives, 10);
    EXPECT_LT(positives, 80);
}

TEST(IdentityProperties, BasisCheckAgreesWithSpotEvaluation)
{
    Rng rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const MultTable l = random_leibniz(rng, 3);
        const MultTable candidate = trial % 2 == 0 ? l : mutate(rng, l);
        const AlgebraBundle b = single("circ", candidate);
        const bool basis_verdict = check_system("leibniz", b).holds;
        EXPECT_EQ(basis_verdict, !spot_violation(registry("leibniz"), b, rng, 20));
    }
    for (int trial = 0; trial < 20; ++trial) {
        const SplitPair nd = random_novikov_dialgebra(rng, 3);
        SplitPair candidate = nd;
        if (trial % 2 == 1)
            candidate.second = mutate(rng, candidate.second);
        const AlgebraBundle b = candidate.to_bundle();
        EXPECT_EQ(check_system("novikov-dialgebra", b).holds, !spot_violation(registry("novikov-dialgebra"), b, rng, 20));
    }
}

TEST(IdentityProperties, ZeroBundlesSatisfyEverything)
{
    for (const char* name : {"zero1", "zero2", "zero3", "zero4"}) {
        const AlgebraBundle b = bundle_of(name);
        for (const auto& sys : registry_names())
            EXPECT_TRUE(check_system(instantiate(registry(sys), b), b).holds) << name << " " << sys;
    }
}
