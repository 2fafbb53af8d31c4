#include "nalg/algebra.hpp"
#include "nalg/io.hpp"
#include "nalg/random.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace nalg;
using namespace nalg::testing;

namespace {

MultTable leib2() { return product_of("leib2", "circ"); }

Vector random_vector(Rng& rng, std::size_t n)
{
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = Rational(rng.uniform(-4, 4), rng.uniform(1, 3));
    return v;
}

} // namespace

TEST(Multiply, Leib2Examples)
{
    EXPECT_EQ(multiply(leib2(), e(2, 0), e(2, 0)), e(2, 1));
    EXPECT_TRUE(multiply(leib2(), e(2, 1), e(2, 0)).is_zero());
    EXPECT_TRUE(multiply(leib2(), Vector(2), Vector{3, 4}).is_zero());
    EXPECT_EQ(kind_of([] { multiply(leib2(), Vector(3), Vector(2)); }), ErrorKind::DimensionMismatch);
}

TEST(TableOps, SumRecoversLeib2FromItsSplit)
{
    const AlgebraBundle lc = bundle_of("omega2-on-leib2");
    MultTable succ(2), prec(2);
    succ(0, 0, 1) = -1;
    prec(0, 0, 1) = 2;
    EXPECT_EQ(table_sum(succ, prec), lc.product("circ"));
    EXPECT_EQ(table_sum(MultTable(2), leib2()), leib2());
    EXPECT_TRUE(table_sum(leib2(), table_scale(leib2(), -1)).is_zero());
    EXPECT_EQ(kind_of([] { table_sum(MultTable(2), MultTable(3)); }), ErrorKind::DimensionMismatch);
}

TEST(TableOps, FlipAndScale)
{
    EXPECT_EQ(table_flip(leib2()), leib2());
    MultTable t(2), flipped(2);
    t(0, 1, 0) = 1;
    flipped(1, 0, 0) = 1;
    EXPECT_EQ(table_flip(t), flipped);
    EXPECT_TRUE(table_scale(leib2(), 0).is_zero());
    EXPECT_EQ(table_scale(leib2(), 1), leib2());
    const MultTable scaled = table_scale(product_of("nov1", "vdash"), -3);
    EXPECT_EQ(scaled(0, 0, 0), Rational(-3));
}

TEST(MultOperator, Leib2)
{
    EXPECT_EQ(mult_operator(leib2(), Side::Left, 0), (Matrix{{0, 0}, {1, 0}}));
    EXPECT_TRUE(mult_operator(leib2(), Side::Left, 1).is_zero());
    EXPECT_TRUE(mult_operator(MultTable(3), Side::Right, 2).is_zero());
    EXPECT_EQ(kind_of([] { mult_operator(leib2(), Side::Left, 2); }), ErrorKind::IndexOutOfRange);
}

TEST(DualizeEndo, Examples)
{
    EXPECT_TRUE(dualize_endo(Matrix(2, 2)).is_zero());
    EXPECT_EQ(dualize_endo(Matrix::identity(2)), -Matrix::identity(2));
    EXPECT_EQ(dualize_endo(Matrix{{0, 1}, {0, 0}}), (Matrix{{0, 0}, {-1, 0}}));
}

TEST(Forms, Predicates)
{
    const BilinearForm w2(Matrix{{0, 1}, {-1, 0}});
    EXPECT_TRUE(form_is_skew(w2));
    EXPECT_TRUE(form_is_nondegenerate(w2));
    EXPECT_FALSE(form_is_symmetric(w2));
    const BilinearForm zero(Matrix(2, 2));
    EXPECT_TRUE(form_is_skew(zero));
    EXPECT_TRUE(form_is_symmetric(zero));
    EXPECT_FALSE(form_is_nondegenerate(zero));
    const BilinearForm id(Matrix::identity(2));
    EXPECT_TRUE(form_is_symmetric(id));
    EXPECT_FALSE(form_is_skew(id));
    EXPECT_TRUE(form_is_nondegenerate(id));
}

TEST(AlgebraProperties, BilinearityAndOperatorConsistency)
{
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        const MultTable t = random_table(rng, n);
        const Vector u = random_vector(rng, n), u2 = random_vector(rng, n), v = random_vector(rng, n);
        const Rational a(rng.uniform(-3, 3), rng.uniform(1, 3));
        EXPECT_EQ(multiply(t, a * u + u2, v), a * multiply(t, u, v) + multiply(t, u2, v));
        EXPECT_EQ(multiply(t, v, a * u + u2), a * multiply(t, v, u) + multiply(t, v, u2));
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_EQ(multiply(t, e(n, i), v), mult_operator(t, Side::Left, i) * v);
            EXPECT_EQ(multiply(t, v, e(n, i)), mult_operator(t, Side::Right, i) * v);
        }
        const Matrix m = random_matrix(rng, n, n);
        EXPECT_EQ(dualize_endo(dualize_endo(m)), m);
        EXPECT_EQ(table_flip(table_flip(t)), t);
        const MultTable s = random_table(rng, n), r = random_table(rng, n);
        EXPECT_EQ(table_sum(t, s), table_sum(s, t));
        EXPECT_EQ(table_sum(table_sum(t, s), r), table_sum(t, table_sum(s, r)));
    }
}

TEST(Json, RoundTrip)
{
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        AlgebraBundle b(n);
        b.add("circ", random_table(rng, n)).add("omega", BilinearForm(random_matrix(rng, n, n)));
        b.add("P", LinearEndo(random_matrix(rng, n, n)));
        const std::string text = bundle_to_json(b).dump();
        const AlgebraBundle back = bundle_from_json(nlohmann::json::parse(text));
        EXPECT_EQ(bundle_to_json(back).dump(), text);
        EXPECT_EQ(back.product("circ"), b.product("circ"));
    }
}

TEST(Json, InputErrors)
{
    using nlohmann::json;
    const json duplicate = json::parse(R"({"dim":1,"products":{"circ":[{"i":0,"j":0,"k":0,"c":"1"},{"i":0,"j":0,"k":0,"c":"2"}]}})");
    EXPECT_EQ(kind_of([&] { bundle_from_json(duplicate); }), ErrorKind::ParseError);
    const json out_of_range = json::parse(R"({"dim":1,"products":{"circ":[{"i":1,"j":0,"k":0,"c":"1"}]}})");
    EXPECT_EQ(kind_of([&] { bundle_from_json(out_of_range); }), ErrorKind::ParseError);
    const json bad_rational = json::parse(R"({"dim":1,"products":{"circ":[{"i":0,"j":0,"k":0,"c":"1/0"}]}})");
    EXPECT_EQ(kind_of([&] { bundle_from_json(bad_rational); }), ErrorKind::ParseError);
    const json no_dim = json::parse(R"({"products":{}})");
    EXPECT_EQ(kind_of([&] { bundle_from_json(no_dim); }), ErrorKind::ParseError);
    const json parsed = json::parse(R"({"dim":1,"products":{"circ":[{"i":0,"j":0,"k":0,"c":"6/-4"}]}})");
    EXPECT_EQ(bundle_from_json(parsed).product("circ")(0, 0, 0), Rational(-3, 2));
}

TEST(Bundle, UnknownNames)
{
    const AlgebraBundle b = bundle_of("leib2");
    EXPECT_EQ(kind_of([&] { b.product("succ"); }), ErrorKind::UnknownName);
    EXPECT_EQ(kind_of([&] { b.form("omega"); }), ErrorKind::UnknownName);
    EXPECT_EQ(kind_of([&] { b.map("P"); }), ErrorKind::UnknownName);
}
