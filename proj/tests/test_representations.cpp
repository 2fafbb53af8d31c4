#include "nalg/constructions.hpp"
#include "nalg/representations.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace nalg;
using namespace nalg::testing;

namespace {

MultTable leib2() { return product_of("leib2", "circ"); }

SplitPair apl1() { return SplitPair::from_bundle(bundle_of("apl1"), SplitFlavor::AntiPreLeibniz); }

SplitPair leib2_split()
{
    const AlgebraBundle b = bundle_of("omega2-on-leib2");
    return levi_civita_from_cocycle(b.product("circ"), b.form("omega"));
}

} // namespace

TEST(AdjointRep, Leib2)
{
    const RepBundle adj = adjoint_rep(leib2());
    EXPECT_EQ(adj.family("l")[0], (Matrix{{0, 0}, {1, 0}}));
    EXPECT_TRUE(adj.family("l")[1].is_zero());
    EXPECT_TRUE(adjoint_rep(MultTable(2)).family("r")[0].is_zero());
}

TEST(LeibnizRep, AdjointDualAndDoubleDual)
{
    const RepBundle adj = adjoint_rep(leib2());
    EXPECT_TRUE(check_leibniz_rep(leib2(), adj).holds);
    EXPECT_TRUE(check_leibniz_rep(leib2(), dual_leibniz_rep(adj)).holds);
    EXPECT_TRUE(check_leibniz_rep(leib2(), dual_leibniz_rep(dual_leibniz_rep(adj))).holds);
    EXPECT_EQ(dual_leibniz_rep(adj).maps, coadjoint_rep(leib2()).maps);
}

TEST(LeibnizRep, NegatedRightActionIsRejected)
{
    // leib2 is nilpotent, so a non-nilpotent Lie algebra is needed here
    MultTable lie(2);
    lie(0, 1, 1) = 1;
    lie(1, 0, 1) = -1;
    RepBundle rep = adjoint_rep(lie);
    ASSERT_TRUE(check_leibniz_rep(lie, rep).holds);
    for (auto& m : rep.maps["r"])
        m = -m;
    EXPECT_FALSE(check_leibniz_rep(lie, rep).holds);
}

TEST(LeibnizRep, ZeroRepresentation)
{
    const RepBundle zero = dual_leibniz_rep(adjoint_rep(MultTable(2)));
    for (const auto& [name, family] : zero.maps)
        for (const auto& m : family)
            EXPECT_TRUE(m.is_zero());
    EXPECT_TRUE(check_leibniz_rep(MultTable(2), zero).holds);
}

TEST(Semidirect, LeibnizBlocks)
{
    const MultTable sd = semidirect_leibniz(leib2(), adjoint_rep(leib2()));
    EXPECT_EQ(sd.dim(), 4u);
    EXPECT_TRUE(holds("leibniz", single("circ", sd)));
    EXPECT_TRUE(holds("leibniz", single("circ", semidirect_leibniz(leib2(), coadjoint_rep(leib2())))));
    EXPECT_TRUE(semidirect_leibniz(MultTable(2), adjoint_rep(MultTable(2))).is_zero());
    // A.A block carries circ, V.V is zero
    EXPECT_EQ(sd(0, 0, 1), Rational(1));
    EXPECT_EQ(sd(0, 2, 3), Rational(1)); // l(e1) e1' = e2'
    EXPECT_EQ(sd(2, 0, 3), Rational(1)); // r(e1) e1' = e2'
    for (std::size_t k = 0; k < 4; ++k)
        EXPECT_TRUE(sd(2, 2, k).is_zero());
}

TEST(AplRep, AdjointAndDual)
{
    for (const SplitPair& s : {apl1(), leib2_split(), SplitPair{SplitFlavor::AntiPreLeibniz, MultTable(2), MultTable(2)}}) {
        const RepBundle adj = apl_adjoint_rep(s);
        EXPECT_TRUE(check_apl_rep(s, adj).holds);
        EXPECT_TRUE(check_apl_rep(s, dual_apl_rep(adj)).holds);
        EXPECT_TRUE(holds("anti-pre-leibniz", semidirect_apl(s, dual_apl_rep(adj)).to_bundle()));
    }
}

TEST(RepEquivalence, Examples)
{
    const RepBundle adj = adjoint_rep(leib2());
    EXPECT_TRUE(check_rep_equivalence(adj, adj, Matrix::identity(2)));
    EXPECT_FALSE(check_rep_equivalence(adj, dual_leibniz_rep(adj), Matrix::identity(2)));

    const AlgebraBundle b = bundle_of("omega2-on-leib2");
    const SplitPair s = leib2_split();
    const RepBundle split_rep = make_rep(2, 2,
                                         {{"l", [&](std::size_t t) { return -mult_operator(s.first, Side::Left, t); }},
                                          {"r", [&](std::size_t t) { return -mult_operator(s.second, Side::Right, t); }}});
    EXPECT_TRUE(check_rep_equivalence(split_rep, coadjoint_rep(leib2()), form_flat(b.form("omega"))));
    EXPECT_TRUE(check_rep_equivalence(adj, apl_twisted_dual_rep(s), b.form("omega").gram));
    EXPECT_EQ(kind_of([&] { check_rep_equivalence(adj, adj, Matrix(2, 2)); }), ErrorKind::SingularMatrix);
    EXPECT_EQ(kind_of([&] { check_rep_equivalence(adj, adj, Matrix::identity(3)); }), ErrorKind::DimensionMismatch);
}
