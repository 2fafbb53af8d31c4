#include "nalg/constructions.hpp"
#include "nalg/generators.hpp"
#include "nalg/random.hpp"
#include "nalg/representations.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace nalg;
using namespace nalg::testing;

namespace {

MultTable leib2() { return product_of("leib2", "circ"); }
BilinearForm omega2() { return bundle_of("omega2-on-leib2").form("omega"); }

SplitPair pair_of(const std::string& name, SplitFlavor flavor)
{
    return SplitPair::from_bundle(bundle_of(name), flavor);
}

MultTable single_entry(std::size_t n, std::size_t i, std::size_t j, std::size_t k, const Rational& c)
{
    MultTable t(n);
    t(i, j, k) = c;
    return t;
}

RepBundle negated_split_rep(const SplitPair& s)
{
    const std::size_t n = s.dim();
    return make_rep(n, n,
                    {{"l", [&](std::size_t t) { return -mult_operator(s.first, Side::Left, t); }},
                     {"r", [&](std::size_t t) { return -mult_operator(s.second, Side::Right, t); }}});
}

} // namespace

// ---- Levi-Civita ------------------------------------------------------------

TEST(LeviCivita, Leib2Values)
{
    const LeviCivita lc = levi_civita(leib2(), omega2());
    EXPECT_EQ(lc.lozenge, single_entry(2, 0, 0, 1, 2));
    EXPECT_EQ(lc.blacklozenge, single_entry(2, 0, 0, 1, -1));
    EXPECT_EQ(table_sum(lc.lozenge, lc.blacklozenge), leib2());
}

TEST(LeviCivita, ZeroAndInvalidForms)
{
    const LeviCivita lc = levi_civita(MultTable(2), omega2());
    EXPECT_TRUE(lc.lozenge.is_zero());
    EXPECT_TRUE(lc.blacklozenge.is_zero());
    EXPECT_EQ(kind_of([] { levi_civita(leib2(), BilinearForm(Matrix(2, 2))); }), ErrorKind::DegenerateForm);
    EXPECT_EQ(kind_of([] { levi_civita(leib2(), BilinearForm(Matrix::identity(2))); }), ErrorKind::NotSkew);
}

TEST(LeviCivitaFromCocycle, Leib2Values)
{
    const SplitPair s = levi_civita_from_cocycle(leib2(), omega2());
    EXPECT_EQ(s.first, single_entry(2, 0, 0, 1, -1));
    EXPECT_EQ(s.second, single_entry(2, 0, 0, 1, 2));
    EXPECT_TRUE(holds("anti-pre-leibniz", s.to_bundle()));
    EXPECT_TRUE(levi_civita_from_cocycle(MultTable(2), omega2()).to_bundle().products.at("succ").is_zero());
}

TEST(LeviCivitaFromCocycle, RejectsNonCocycle)
{
    Rng rng(5);
    MultTable candidate;
    bool found = false;
    for (int attempt = 0; attempt < 500 && !found; ++attempt) {
        candidate = random_leibniz(rng, 2);
        found = candidate.dim() == 2 && !holds("two-cocycle", AlgebraBundle(2).add("circ", candidate).add("omega", omega2()));
    }
    ASSERT_TRUE(found);
    EXPECT_EQ(kind_of([&] { levi_civita_from_cocycle(candidate, omega2()); }), ErrorKind::NotCocycle);
    EXPECT_NO_THROW(levi_civita_from_cocycle(candidate, omega2(), Validate::Skip));
}

TEST(LeviCivita, CoincidenceAndSplittingOnCocycleInstances)
{
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const AlgebraBundle b = random_cocycle_instance(rng, 4);
        const SplitPair s = levi_civita_from_cocycle(b.product("circ"), b.form("omega"));
        const LeviCivita lc = levi_civita(b.product("circ"), b.form("omega"));
        EXPECT_EQ(table_sum(s.first, s.second), b.product("circ"));
        EXPECT_EQ(table_sum(lc.lozenge, lc.blacklozenge), b.product("circ"));
        EXPECT_EQ(lc.blacklozenge, s.first);
        EXPECT_EQ(lc.lozenge, s.second);
    }
}

// ---- anti-O operators -------------------------------------------------------

TEST(AntiO, Examples)
{
    const SplitPair apl1 = pair_of("apl1", SplitFlavor::AntiPreLeibniz);
    const RepBundle rep = negated_split_rep(apl1);
    const MultTable circ = apl1.sub_adjacent();
    EXPECT_TRUE(check_anti_O(Matrix::identity(1), circ, rep));
    EXPECT_TRUE(check_strong_anti_O(Matrix::identity(1), circ, rep));

    const Matrix t = invert(form_flat(omega2()));
    const RepBundle coad = coadjoint_rep(leib2());
    EXPECT_TRUE(check_anti_O(t, leib2(), coad));
    EXPECT_TRUE(check_strong_anti_O(t, leib2(), coad));
    EXPECT_TRUE(check_anti_O(Matrix(2, 2), leib2(), coad));
    EXPECT_TRUE(check_strong_anti_O(Matrix(2, 2), leib2(), coad));
    EXPECT_FALSE(check_anti_O(Matrix::identity(2), leib2(), adjoint_rep(leib2())));
}

TEST(AntiO, InducedSplit)
{
    const SplitPair apl1 = pair_of("apl1", SplitFlavor::AntiPreLeibniz);
    const RepBundle rep = negated_split_rep(apl1);
    const SplitPair induced = induced_split(Matrix::identity(1), apl1.sub_adjacent(), rep);
    EXPECT_EQ(induced.first, apl1.first);
    EXPECT_EQ(induced.second, apl1.second);

    const SplitPair zero = induced_split(Matrix(2, 2), leib2(), coadjoint_rep(leib2()));
    EXPECT_TRUE(zero.first.is_zero() && zero.second.is_zero());

    // the inverse of the flat map induces a split on the dual space isomorphic to the Levi-Civita one
    const Matrix t = invert(form_flat(omega2()));
    const SplitPair on_dual = induced_split(t, leib2(), coadjoint_rep(leib2()));
    const SplitPair lc = levi_civita_from_cocycle(leib2(), omega2());
    EXPECT_EQ(transport(on_dual, invert(t)), lc);
    EXPECT_TRUE(holds("anti-pre-leibniz", on_dual.to_bundle()));

    EXPECT_EQ(kind_of([] { induced_split(Matrix::identity(2), leib2(), adjoint_rep(leib2())); }), ErrorKind::NotAntiO);
}

TEST(AntiO, CompatibleSplit)
{
    const SplitPair apl1 = pair_of("apl1", SplitFlavor::AntiPreLeibniz);
    EXPECT_EQ(compatible_split_from_invertible_anti_O(Matrix::identity(1), apl1.sub_adjacent(), negated_split_rep(apl1)), apl1);
    const SplitPair s = compatible_split_from_invertible_anti_O(invert(form_flat(omega2())), leib2(), coadjoint_rep(leib2()));
    EXPECT_EQ(s, levi_civita_from_cocycle(leib2(), omega2()));
    const SplitPair z = compatible_split_from_invertible_anti_O(Matrix::identity(2), MultTable(2), coadjoint_rep(MultTable(2)));
    EXPECT_TRUE(z.first.is_zero() && z.second.is_zero());
    EXPECT_EQ(kind_of([] { compatible_split_from_invertible_anti_O(Matrix(2, 2), leib2(), coadjoint_rep(leib2())); }),
              ErrorKind::SingularMatrix);
    EXPECT_EQ(kind_of([] { compatible_split_from_invertible_anti_O(Matrix::identity(2), leib2(), adjoint_rep(leib2())); }),
              ErrorKind::NotAntiO);
}

// ---- perm algebras ----------------------------------------------------------

TEST(PermToLeibniz, Perm4Derivation)
{
    const AlgebraBundle b = bundle_of("perm4");
    const MultTable circ = perm_to_leibniz(b.product("star"), b.map("P").matrix, OperatorMode::Derivation);
    EXPECT_TRUE(holds("leibniz", single("circ", circ)));
    EXPECT_EQ(multiply(circ, e(4, 0), e(4, 1)), -e(4, 2));
    EXPECT_EQ(multiply(circ, e(4, 1), e(4, 0)), e(4, 2));
    EXPECT_TRUE(multiply(circ, e(4, 1), e(4, 1)).is_zero());
    EXPECT_EQ(multiply(circ, e(4, 0), e(4, 2)), Rational(-2) * e(4, 3));
}

TEST(PermToLeibniz, AveragingAndZero)
{
    const AlgebraBundle b = bundle_of("perm4");
    EXPECT_TRUE(perm_to_leibniz(b.product("star"), b.map("Q").matrix, OperatorMode::Averaging).is_zero());
    EXPECT_TRUE(perm_to_leibniz(b.product("star"), Matrix(4, 4), OperatorMode::Derivation).is_zero());
}

TEST(PermToLeibniz, Preconditions)
{
    const AlgebraBundle b = bundle_of("perm4");
    EXPECT_EQ(kind_of([&] { perm_to_leibniz(b.product("star"), b.map("D").matrix, OperatorMode::Derivation); }),
              ErrorKind::OperatorAxiomFails);
    // upper triangular 2x2 matrices: associative, not left-commutative
    MultTable upper(3);
    upper(0, 0, 0) = 1;
    upper(0, 1, 1) = 1;
    upper(1, 2, 1) = 1;
    upper(2, 2, 2) = 1;
    EXPECT_EQ(kind_of([&] { perm_to_leibniz(upper, Matrix(3, 3), OperatorMode::Derivation); }), ErrorKind::NotPerm);
}

TEST(PermToLeibniz, RandomPermWithDerivations)
{
    Rng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const MultTable star = random_perm(rng, 4);
        ASSERT_TRUE(holds("perm", single("star", star)));
        const Matrix d = random_derivation(rng, single("star", star));
        EXPECT_TRUE(holds("leibniz", single("circ", perm_to_leibniz(star, d, OperatorMode::Derivation))));
    }
}

// ---- transforms -------------------------------------------------------------

TEST(Transforms, Minus2Examples)
{
    const SplitPair s = minus2_transform(pair_of("nov1", SplitFlavor::NovikovDialgebra));
    EXPECT_EQ(s.first, single_entry(1, 0, 0, 0, 3));
    EXPECT_EQ(s.second, single_entry(1, 0, 0, 0, -3));
    const SplitPair z = minus2_transform(SplitPair{SplitFlavor::NovikovDialgebra, MultTable(2), MultTable(2)});
    EXPECT_TRUE(z.first.is_zero() && z.second.is_zero());
    const SplitPair l = minus2_transform(SplitPair{SplitFlavor::NovikovDialgebra, leib2(), MultTable(2)});
    EXPECT_EQ(l.first, leib2());
    EXPECT_EQ(l.second, table_scale(leib2(), -2));
}

TEST(Transforms, Plus2Examples)
{
    const SplitPair s = plus2_transform(pair_of("apl1", SplitFlavor::AntiPreLeibniz));
    EXPECT_EQ(s.first, single_entry(1, 0, 0, 0, -1));
    EXPECT_EQ(s.second, single_entry(1, 0, 0, 0, -1));
    EXPECT_TRUE(holds("novikov-dialgebra", s.to_bundle()));
}

TEST(Transforms, RoundTripScalesByMinusThree)
{
    Rng rng(2024);
    std::vector<SplitPair> inputs = {pair_of("nov1", SplitFlavor::NovikovDialgebra), pair_of("apl1", SplitFlavor::AntiPreLeibniz)};
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        inputs.push_back(SplitPair{SplitFlavor::NovikovDialgebra, random_table(rng, n), random_table(rng, n)});
    }
    for (const auto& s : inputs) {
        const SplitPair back = plus2_transform(minus2_transform(s));
        EXPECT_EQ(back.first, table_scale(s.first, -3));
        EXPECT_EQ(back.second, table_scale(s.second, -3));
    }
}

TEST(Transforms, PreAndTransformed)
{
    const SplitPair nov1 = pair_of("nov1", SplitFlavor::Transformed);
    const SplitPair pre = pre_from_transformed(nov1);
    EXPECT_EQ(pre.first, single_entry(1, 0, 0, 0, 1));
    EXPECT_EQ(pre.second, single_entry(1, 0, 0, 0, -1));
    const SplitPair back = transformed_from_pre(pre);
    EXPECT_EQ(back.first, nov1.first);
    EXPECT_EQ(back.second, nov1.second);

    Rng rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 2));
        const SplitPair p{SplitFlavor::PreLeibniz, random_table(rng, n, 40), random_table(rng, n, 40)};
        const SplitPair t = transformed_from_pre(p);
        EXPECT_EQ(pre_from_transformed(t).first, p.first);
        EXPECT_EQ(pre_from_transformed(t).second, p.second);
        EXPECT_EQ(holds("pre-leibniz", p.to_bundle()), holds("transformed-pre-leibniz", t.to_bundle()));
    }
    Rng good(9);
    for (int trial = 0; trial < 30; ++trial) {
        const SplitPair p = random_pre_leibniz(good, 3);
        EXPECT_TRUE(holds("pre-leibniz", p.to_bundle()));
        EXPECT_TRUE(holds("transformed-pre-leibniz", transformed_from_pre(p).to_bundle()));
    }
}

TEST(Transforms, AdmissibleImagesOfFixtures)
{
    const AlgebraBundle image = minus2_transform(pair_of("nov1", SplitFlavor::NovikovDialgebra)).to_bundle();
    EXPECT_TRUE(holds("admissible-novikov-dialgebra", image));
    EXPECT_TRUE(holds("anti-pre-leibniz", image));
}

// ---- double structures ------------------------------------------------------

TEST(DoubleStructures, AplExamples)
{
    const auto d = double_structures_apl(pair_of("apl1", SplitFlavor::AntiPreLeibniz));
    EXPECT_EQ(d.first.dim(), 2u);
    EXPECT_TRUE(holds("leibniz", single("circ", d.first)));
    EXPECT_TRUE(holds("leibniz", single("circ", d.second)));
    EXPECT_TRUE(holds("compatible-leibniz", AlgebraBundle(2).add("circ1", d.first).add("circ2", d.second)));

    const auto z = double_structures_apl(SplitPair{SplitFlavor::AntiPreLeibniz, MultTable(2), MultTable(2)});
    EXPECT_TRUE(z.first.is_zero() && z.second.is_zero());

    const SplitPair lc = levi_civita_from_cocycle(leib2(), omega2());
    const auto dl = double_structures_apl(lc);
    EXPECT_EQ(holds("compatible-leibniz", AlgebraBundle(4).add("circ1", dl.first).add("circ2", dl.second)),
              holds("admissible-novikov-dialgebra", lc.to_bundle()));

    const SplitPair bad{SplitFlavor::AntiPreLeibniz, single_entry(1, 0, 0, 0, 1), MultTable(1)};
    ASSERT_FALSE(holds("anti-pre-leibniz", bad.to_bundle()));
    EXPECT_EQ(kind_of([&] { double_structures_apl(bad); }), ErrorKind::NotAntiPreLeibniz);
}

TEST(DoubleStructures, PreExamples)
{
    const SplitPair pre = pre_from_transformed(pair_of("nov1", SplitFlavor::Transformed));
    const auto d = double_structures_pre(pre);
    EXPECT_TRUE(holds("compatible-leibniz", AlgebraBundle(2).add("circ1", d.first).add("circ2", d.second)));
    const auto z = double_structures_pre(SplitPair{SplitFlavor::PreLeibniz, MultTable(1), MultTable(1)});
    EXPECT_TRUE(z.first.is_zero() && z.second.is_zero());
    const SplitPair bad{SplitFlavor::PreLeibniz, single_entry(1, 0, 0, 0, 1), MultTable(1)};
    ASSERT_FALSE(holds("pre-leibniz", bad.to_bundle()));
    EXPECT_EQ(kind_of([&] { double_structures_pre(bad); }), ErrorKind::NotPreLeibniz);
}

TEST(DoubleStructures, NonAdmissibleExampleIsNotCompatible)
{
    // e1 succ e1 = e1, e1 succ e2 = e2, e1 prec e1 = -e1
    MultTable succ(2), prec(2);
    succ(0, 0, 0) = 1;
    succ(0, 1, 1) = 1;
    prec(0, 0, 0) = -1;
    const SplitPair s{SplitFlavor::AntiPreLeibniz, succ, prec};
    ASSERT_TRUE(holds("anti-pre-leibniz", s.to_bundle()));
    EXPECT_FALSE(holds("admissible-novikov-dialgebra", s.to_bundle()));
    const auto d = double_structures_apl(s);
    EXPECT_FALSE(holds("compatible-leibniz", AlgebraBundle(4).add("circ1", d.first).add("circ2", d.second)));
}

// ---- omega_p ----------------------------------------------------------------

TEST(OmegaP, Examples)
{
    EXPECT_EQ(omega_p(1).gram, omega2().gram);
    EXPECT_TRUE(form_is_skew(omega_p(3)));
    EXPECT_TRUE(form_is_nondegenerate(omega_p(3)));
    EXPECT_EQ(kind_of([] { omega_p(0); }), ErrorKind::DimensionMismatch);

    const SplitPair apl1 = pair_of("apl1", SplitFlavor::AntiPreLeibniz);
    AlgebraBundle b(2);
    b.add("circ", semidirect_leibniz(apl1.sub_adjacent(), apl_twisted_dual_rep(apl1))).add("omega", omega_p(1));
    EXPECT_TRUE(holds("two-cocycle", b));
}

// ---- GD constructions -------------------------------------------------------

TEST(GdFromNovikovDi, Examples)
{
    const AlgebraBundle gd = gd_from_novikov_di(pair_of("nov1", SplitFlavor::NovikovDialgebra));
    EXPECT_TRUE(gd.product("circ").is_zero());
    EXPECT_TRUE(holds("gd-dialgebra", gd));
    EXPECT_EQ(gd.product("vdash"), product_of("gd-nov1", "vdash"));
    EXPECT_EQ(gd.product("dashv"), product_of("gd-nov1", "dashv"));

    SplitPair negated = pair_of("nov1", SplitFlavor::NovikovDialgebra);
    negated.first = table_scale(negated.first, -1);
    negated.second = table_scale(negated.second, -1);
    EXPECT_TRUE(holds("gd-dialgebra", gd_from_novikov_di(negated)));

    MultTable idempotent(2);
    idempotent(0, 0, 0) = 1;
    const SplitPair bad{SplitFlavor::NovikovDialgebra, idempotent, MultTable(2)};
    ASSERT_FALSE(holds("novikov-dialgebra", bad.to_bundle()));
    EXPECT_EQ(kind_of([&] { gd_from_novikov_di(bad); }), ErrorKind::NotNovikovDialgebra);
}

TEST(GdFromAveraging, Examples)
{
    const AlgebraBundle perm4 = bundle_of("perm4");
    const MultTable star = perm4.product("star");
    const AlgebraBundle gd = gd_from_averaging(MultTable(4), star, perm4.map("Q").matrix);
    EXPECT_TRUE(holds("gd-dialgebra", gd));

    const AlgebraBundle zero = gd_from_averaging(MultTable(4), star, Matrix(4, 4));
    for (const auto& [name, t] : zero.products)
        EXPECT_TRUE(t.is_zero()) << name;
    const AlgebraBundle abelian = gd_from_averaging(MultTable(2), MultTable(2), Matrix{{1, 2}, {3, 4}});
    for (const auto& [name, t] : abelian.products)
        EXPECT_TRUE(t.is_zero()) << name;

    EXPECT_EQ(kind_of([&] { gd_from_averaging(leib2(), MultTable(2), Matrix(2, 2)); }), ErrorKind::NotGDAlgebra);
    EXPECT_EQ(kind_of([&] { gd_from_averaging(MultTable(4), star, perm4.map("D").matrix); }), ErrorKind::OperatorAxiomFails);
}

TEST(DerivationProduct, Examples)
{
    const AlgebraBundle gd = bundle_of("gd-deriv2");
    EXPECT_EQ(derivation_product(gd, Matrix(2, 2)), gd.product("circ"));
    const MultTable dot = derivation_product(gd, gd.map("P").matrix);
    EXPECT_EQ(dot, gd.product("dot"));
    EXPECT_EQ(dot, single_entry(2, 0, 0, 1, Rational(3, 2)));
    EXPECT_TRUE(holds("leibniz", single("circ", dot)));

    const AlgebraBundle zero = bundle_of("zero2");
    EXPECT_TRUE(derivation_product(zero, zero.map("P").matrix).is_zero());

    EXPECT_TRUE(derivation_basis(bundle_of("gd-nov1"), {"circ", "vdash", "dashv"}).empty());

    EXPECT_EQ(kind_of([&] { derivation_product(gd, Matrix::identity(2)); }), ErrorKind::OperatorAxiomFails);
    AlgebraBundle broken = gd;
    broken.products["dashv"] = single_entry(2, 1, 1, 0, 1);
    EXPECT_EQ(kind_of([&] { derivation_product(broken, Matrix(2, 2)); }), ErrorKind::NotGDDialgebra);
}

TEST(DerivationProduct, RandomGdDialgebrasWithDerivations)
{
    Rng rng(123);
    int nontrivial = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const AlgebraBundle gd = random_gd_dialgebra(rng, 3);
        ASSERT_TRUE(holds("gd-dialgebra", gd));
        const auto basis = derivation_basis(gd, {"circ", "vdash", "dashv"});
        if (basis.empty())
            continue;
        const MultTable dot = derivation_product(gd, random_combination(rng, basis));
        EXPECT_TRUE(holds("leibniz", single("circ", dot)));
        nontrivial += dot == gd.product("circ") ? 0 : 1;
    }
    SUCCEED() << nontrivial << " instances changed the product";
}
