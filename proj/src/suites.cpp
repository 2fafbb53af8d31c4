#include "nalg/suites.hpp"
#include "nalg/catalog.hpp"
#include "nalg/constructions.hpp"
#include "nalg/affinization.hpp"
#include "nalg/error.hpp"
#include "nalg/generators.hpp"
#include "nalg/representations.hpp"

#include <functional>
#include <map>

namespace nalg {

namespace {

using Verdicts = std::vector<std::pair<std::string, bool>>;

bool has_all(const AlgebraBundle& b, const std::vector<std::string>& products, const std::vector<std::string>& forms = {})
{
    for (const auto& p : products)
        if (!b.products.count(p))
            return false;
    for (const auto& f : forms)
        if (!b.forms.count(f))
            return false;
    return true;
}

std::vector<std::pair<std::string, AlgebraBundle>> fixtures_with(const std::vector<std::string>& products,
                                                                  const std::vector<std::string>& forms = {})
{
    std::vector<std::pair<std::string, AlgebraBundle>> out;
    for (const auto& name : fixture_names()) {
        Fixture f = fixture(name);
        if (has_all(f.bundle, products, forms))
            out.emplace_back("fixture:" + name, std::move(f.bundle));
    }
    return out;
}

SplitPair split_of(const AlgebraBundle& b, SplitFlavor flavor)
{
    return SplitPair::from_bundle(b, flavor);
}

bool is_valid_cocycle_form(const MultTable& circ, const BilinearForm& w)
{
    if (!form_is_skew(w) || !form_is_nondegenerate(w))
        return false;
    AlgebraBundle b(circ.dim());
    b.add("circ", circ).add("omega", w);
    return holds("two-cocycle", b);
}

std::string label(const std::string& kind, std::size_t index)
{
    return "random:" + kind + "#" + std::to_string(index);
}

RepBundle conjugate(const RepBundle& rep, const Matrix& g)
{
    const Matrix ginv = invert(g);
    RepBundle out = rep;
    for (auto& [name, family] : out.maps)
        for (auto& m : family)
            m = ginv * m * g;
    return out;
}

RepBundle negated_split_rep(const SplitPair& s)
{
    const std::size_t n = s.dim();
    return make_rep(n, n,
                    {{"l", [&](std::size_t t) { return -mult_operator(s.first, Side::Left, t); }},
                     {"r", [&](std::size_t t) { return -mult_operator(s.second, Side::Right, t); }}});
}

// ---- anti-O operator inputs -------------------------------------------------

struct AntiOInput {
    std::string source;
    MultTable circ;
    RepBundle rep;
    Matrix T;
};

std::vector<AntiOInput> anti_o_inputs(Rng& rng, std::size_t samples)
{
    std::vector<AntiOInput> out;
    for (auto& [source, b] : fixtures_with({"circ"})) {
        const MultTable& circ = b.product("circ");
        if (!holds("leibniz", AlgebraBundle(b.dim).add("circ", circ)))
            continue;
        if (b.forms.count("omega") && is_valid_cocycle_form(circ, b.form("omega")))
            out.push_back({source + ":inverse-flat", circ, coadjoint_rep(circ), invert(form_flat(b.form("omega")))});
        out.push_back({source + ":identity-adjoint", circ, adjoint_rep(circ), Matrix::identity(b.dim)});
    }
    for (std::size_t i = 0; i < samples; ++i) {
        switch (rng.uniform(0, 3)) {
        case 0: {
            const AlgebraBundle b = random_cocycle_instance(rng, 4);
            const MultTable& circ = b.product("circ");
            out.push_back({label("cocycle-inverse-flat", i), circ, coadjoint_rep(circ), invert(form_flat(b.form("omega")))});
            break;
        }
        case 1: {
            const SplitPair s = random_anti_pre_leibniz(rng, 3);
            const Matrix g = random_invertible(rng, s.dim());
            out.push_back({label("split-rep-transported", i), s.sub_adjacent(), conjugate(negated_split_rep(s), g), g});
            break;
        }
        case 2: {
            const SplitPair s = random_anti_pre_leibniz(rng, 3);
            out.push_back({label("split-rep-random-operator", i), s.sub_adjacent(), negated_split_rep(s),
                           random_invertible(rng, s.dim())});
            break;
        }
        default: {
            const MultTable circ = random_leibniz(rng, 3);
            out.push_back({label("leibniz-coadjoint-random-operator", i), circ, coadjoint_rep(circ),
                           random_invertible(rng, circ.dim())});
            break;
        }
        }
    }
    return out;
}

std::vector<SuiteInstance> anti_o_iff_split(Rng& rng, std::size_t samples)
{
    std::vector<SuiteInstance> out;
    for (const auto& in : anti_o_inputs(rng, samples)) {
        const bool anti_o = check_anti_O(in.T, in.circ, in.rep);
        const SplitPair s = compatible_split_from_invertible_anti_O(in.T, in.circ, in.rep, Validate::Skip);
        const bool compatible = holds("anti-pre-leibniz", s.to_bundle()) && table_sum(s.first, s.second) == in.circ;
        out.push_back({in.source, {{"anti_o", anti_o}, {"split_is_compatible", compatible}}, anti_o == compatible});
    }
    return out;
}

std::vector<SuiteInstance> invertible_anti_o_is_strong(Rng& rng, std::size_t samples)
{
    std::vector<SuiteInstance> out;
    for (const auto& in : anti_o_inputs(rng, samples)) {
        const bool anti_o = check_anti_O(in.T, in.circ, in.rep);
        const bool strong = check_strong_anti_O(in.T, in.circ, in.rep);
        out.push_back({in.source, {{"anti_o", anti_o}, {"strong", strong}}, !anti_o || strong});
    }
    return out;
}

// ---- cocycle inputs ---------------------------------------------------------

struct FormInput {
    std::string source;
    MultTable circ;
    BilinearForm omega;
};

std::vector<FormInput> cocycle_inputs(Rng& rng, std::size_t samples)
{
    std::vector<FormInput> out;
    for (auto& [source, b] : fixtures_with({"circ"}, {"omega"}))
        if (is_valid_cocycle_form(b.product("circ"), b.form("omega")))
            out.push_back({source, b.product("circ"), b.form("omega")});
    for (std::size_t i = 0; i < samples; ++i) {
        const AlgebraBundle b = random_cocycle_instance(rng, 4);
        out.push_back({label("cocycle", i), b.product("circ"), b.form("omega")});
    }
    return out;
}

std::vector<SuiteInstance> cocycle_splitting(Rng& rng, std::size_t samples)
{
    std::vector<SuiteInstance> out;
    for (const auto& in : cocycle_inputs(rng, samples)) {
        const SplitPair s = levi_civita_from_cocycle(in.circ, in.omega);
        const LeviCivita lc = levi_civita(in.circ, in.omega);
        const Matrix flat = form_flat(in.omega);
        const RepBundle coadjoint = coadjoint_rep(in.circ);
        Verdicts v = {
            {"split_is_anti_pre_leibniz", holds("anti-pre-leibniz", s.to_bundle())},
            {"split_sums_to_circ", table_sum(s.first, s.second) == in.circ},
            {"levi_civita_coincides", lc.blacklozenge == s.first && lc.lozenge == s.second},
            {"split_rep_equivalent_to_coadjoint", check_rep_equivalence(negated_split_rep(s), coadjoint, flat)},
            {"adjoint_equivalent_to_twisted_dual", check_rep_equivalence(adjoint_rep(in.circ), apl_twisted_dual_rep(s), in.omega.gram)},
            {"inverse_flat_is_anti_o", check_anti_O(invert(flat), in.circ, coadjoint)},
            {"compatible_split_is_levi_civita",
             compatible_split_from_invertible_anti_O(invert(flat), in.circ, coadjoint, Validate::Skip) == s},
        };
        bool all = true;
        for (const auto& [name, ok] : v)
            all = all && ok;
        out.push_back({in.source, std::move(v), all});
    }
    return out;
}

Matrix random_skew_nondegenerate(Rng& rng, std::size_t n)
{
    for (;;) {
        Matrix g(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c) {
                g(r, c) = rng.uniform(-2, 2);
                g(c, r) = -g(r, c);
            }
        if (rank(g) == n)
            return g;
    }
}

std::vector<SuiteInstance> cocycle_iff_split_invariant(Rng& rng, std::size_t samples)
{
    std::vector<FormInput> inputs;
    for (auto& [source, b] : fixtures_with({"circ"}, {"omega"}))
        if (form_is_skew(b.form("omega")) && form_is_nondegenerate(b.form("omega")))
            inputs.push_back({source, b.product("circ"), b.form("omega")});
    for (std::size_t i = 0; i < samples; ++i) {
        const AlgebraBundle b = random_cocycle_instance(rng, 4);
        if (rng.chance(1, 2)) {
            inputs.push_back({label("cocycle", i), b.product("circ"), b.form("omega")});
        } else {
            inputs.push_back({label("random-skew-form", i), b.product("circ"),
                              BilinearForm(random_skew_nondegenerate(rng, b.dim))});
        }
    }
    std::vector<SuiteInstance> out;
    for (const auto& in : inputs) {
        AlgebraBundle given(in.circ.dim());
        given.add("circ", in.circ).add("omega", in.omega);
        const bool cocycle = holds("two-cocycle", given);
        AlgebraBundle split = levi_civita_from_cocycle(in.circ, in.omega, Validate::Skip).to_bundle();
        split.add("omega", in.omega);
        const bool invariant = holds("apl-invariance", split);
        out.push_back({in.source, {{"two_cocycle", cocycle}, {"split_invariant", invariant}}, cocycle == invariant});
    }
    return out;
}

// ---- anti-pre-Leibniz inputs ------------------------------------------------

struct SplitInput {
    std::string source;
    SplitPair split;
};

std::vector<SplitInput> apl_fixture_inputs()
{
    std::vector<SplitInput> out;
    for (auto& [source, b] : fixtures_with({"succ", "prec"})) {
        SplitPair s = split_of(b, SplitFlavor::AntiPreLeibniz);
        if (holds("anti-pre-leibniz", s.to_bundle()))
            out.push_back({source, std::move(s)});
    }
    for (auto& [source, b] : fixtures_with({"circ"}, {"omega"}))
        if (is_valid_cocycle_form(b.product("circ"), b.form("omega")))
            out.push_back({source + ":levi-civita", levi_civita_from_cocycle(b.product("circ"), b.form("omega"))});
    return out;
}

std::vector<SplitInput> apl_inputs(Rng& rng, std::size_t samples)
{
    std::vector<SplitInput> out = apl_fixture_inputs();
    for (std::size_t i = 0; i < samples; ++i)
        out.push_back({label("anti-pre-leibniz", i), random_anti_pre_leibniz(rng, 3)});
    return out;
}

bool all_true(const Verdicts& v)
{
    for (const auto& [name, ok] : v)
        if (!ok)
            return false;
    return true;
}

std::vector<SuiteInstance> omega_p_on_double(Rng& rng, std::size_t samples)
{
    std::vector<SuiteInstance> out;
    for (const auto& in : apl_inputs(rng, samples)) {
        const BilinearForm w = omega_p(in.split.dim());
        AlgebraBundle b(2 * in.split.dim());
        b.add("circ", semidirect_leibniz(in.split.sub_adjacent(), apl_twisted_dual_rep(in.split))).add("omega", w);
        Verdicts v = {{"skew", form_is_skew(w)},
                      {"nondegenerate", form_is_nondegenerate(w)},
                      {"semidirect_is_leibniz", holds("leibniz", b)},
                      {"two_cocycle", holds("two-cocycle", b)}};
        const bool agrees = all_true(v);
        out.push_back({in.source, std::move(v), agrees});
    }
    return out;
}

std::vector<SuiteInstance> admissible_is_anti_pre_leibniz(Rng& rng, std::size_t samples)
{
    std::vector<SplitInput> inputs;
    for (auto& [source, b] : fixtures_with({"succ", "prec"}))
        inputs.push_back({source, split_of(b, SplitFlavor::AntiPreLeibniz)});
    for (std::size_t i = 0; i < samples; ++i) {
        switch (rng.uniform(0, 3)) {
        case 0:
            inputs.push_back({label("minus2-of-novikov-dialgebra", i),
                              minus2_transform(random_novikov_dialgebra(rng, 3))});
            break;
        case 1:
            inputs.push_back({label("anti-pre-leibniz", i), random_anti_pre_leibniz(rng, 3)});
            break;
        case 2: {
            SplitPair s = random_anti_pre_leibniz(rng, 3);
            MultTable& target = rng.chance(1, 2) ? s.first : s.second;
            target = mutate(rng, target);
            inputs.push_back({label("mutated-anti-pre-leibniz", i), std::move(s)});
            break;
        }
        default: {
            const auto n = static_cast<std::size_t>(rng.uniform(1, 2));
            MultTable a = random_table(rng, n, 40), b = random_table(rng, n, 40);
            inputs.push_back({label("random-tables", i), SplitPair{SplitFlavor::AntiPreLeibniz, a, b}});
            break;
        }
        }
    }
    std::vector<SuiteInstance> out;
    for (const auto& in : inputs) {
        const AlgebraBundle b = in.split.to_bundle();
        const bool admissible = holds("admissible-novikov-dialgebra", b);
        const bool apl = holds("anti-pre-leibniz", b);
        out.push_back({in.source, {{"admissible", admissible}, {"anti_pre_leibniz", apl}}, !admissible || apl});
    }
    return out;
}

std::vector<SuiteInstance> minus2_image(Rng& rng, std::size_t samples)
{
    std::vector<SplitInput> inputs;
    for (auto& [source, b] : fixtures_with({"vdash", "dashv"}))
        inputs.push_back({source, split_of(b, SplitFlavor::Transformed)});
    for (std::size_t i = 0; i < samples; ++i) {
        switch (rng.uniform(0, 2)) {
        case 0: {
            SplitPair s = random_novikov_dialgebra(rng, 3);
            s.flavor = SplitFlavor::Transformed;
            inputs.push_back({label("novikov-dialgebra", i), std::move(s)});
            break;
        }
        case 1: {
            const MultTable dot = random_associative(rng, 3);
            inputs.push_back({label("associative-doubled", i), SplitPair{SplitFlavor::Transformed, dot, dot}});
            break;
        }
        default:
            inputs.push_back({label("transformed-pre-leibniz", i), transformed_from_pre(random_pre_leibniz(rng, 3))});
            break;
        }
    }
    std::vector<SuiteInstance> out;
    for (const auto& in : inputs) {
        const SplitPair nd{SplitFlavor::NovikovDialgebra, in.split.first, in.split.second};
        const bool transformed = holds("transformed-pre-leibniz", in.split.to_bundle());
        const bool novikov = holds("novikov-dialgebra", nd.to_bundle());
        const AlgebraBundle image = minus2_transform(nd).to_bundle();
        const bool apl = holds("anti-pre-leibniz", image);
        const bool admissible = holds("admissible-novikov-dialgebra", image);
        out.push_back({in.source,
                       {{"transformed_pre_leibniz", transformed},
                        {"novikov_dialgebra", novikov},
                        {"minus2_anti_pre_leibniz", apl},
                        {"minus2_admissible", admissible}},
                       transformed && novikov == apl && (!novikov || admissible)});
    }
    return out;
}

std::vector<SuiteInstance> plus2_image(Rng& rng, std::size_t samples)
{
    std::vector<SplitInput> inputs = apl_inputs(rng, samples);
    std::vector<SuiteInstance> out;
    for (const auto& in : inputs) {
        const AlgebraBundle b = in.split.to_bundle();
        const bool apl = holds("anti-pre-leibniz", b);
        const bool admissible = holds("admissible-novikov-dialgebra", b);
        SplitPair image = plus2_transform(in.split);
        image.flavor = SplitFlavor::Transformed;
        const bool transformed = holds("transformed-pre-leibniz", image.to_bundle());
        image.flavor = SplitFlavor::NovikovDialgebra;
        const bool novikov = holds("novikov-dialgebra", image.to_bundle());
        out.push_back({in.source,
                       {{"anti_pre_leibniz", apl},
                        {"admissible", admissible},
                        {"plus2_transformed_pre_leibniz", transformed},
                        {"plus2_novikov_dialgebra", novikov}},
                       apl && admissible == transformed && (!admissible || novikov)});
    }
    return out;
}

bool compatible(const DoubleStructures& d)
{
    AlgebraBundle b(d.first.dim());
    b.add("circ1", d.first).add("circ2", d.second);
    return holds("compatible-leibniz", b);
}

std::vector<SuiteInstance> apl_doubles_compatible(Rng& rng, std::size_t samples)
{
    std::vector<SuiteInstance> out;
    for (const auto& in : apl_inputs(rng, samples)) {
        const AlgebraBundle b = in.split.to_bundle();
        const bool apl = holds("anti-pre-leibniz", b);
        const bool admissible = holds("admissible-novikov-dialgebra", b);
        const bool compat = compatible(double_structures_apl(in.split, Validate::Skip));
        out.push_back({in.source,
                       {{"anti_pre_leibniz", apl}, {"admissible", admissible}, {"double_compatible", compat}},
                       apl && admissible == compat});
    }
    return out;
}

std::vector<SuiteInstance> pre_doubles_compatible(Rng& rng, std::size_t samples)
{
    std::vector<SplitInput> inputs;
    for (auto& [source, b] : fixtures_with({"rhd", "lhd"}))
        inputs.push_back({source, split_of(b, SplitFlavor::PreLeibniz)});
    for (auto& [source, b] : fixtures_with({"vdash", "dashv"})) {
        const SplitPair nd = split_of(b, SplitFlavor::NovikovDialgebra);
        if (holds("transformed-pre-leibniz", SplitPair{SplitFlavor::Transformed, nd.first, nd.second}.to_bundle()))
            inputs.push_back({source + ":pre-image", pre_from_transformed(nd)});
    }
    for (std::size_t i = 0; i < samples; ++i)
        inputs.push_back({label("pre-leibniz", i), random_pre_leibniz(rng, 3)});
    std::vector<SuiteInstance> out;
    for (const auto& in : inputs) {
        const bool pre = holds("pre-leibniz", in.split.to_bundle());
        SplitPair t = transformed_from_pre(in.split);
        t.flavor = SplitFlavor::NovikovDialgebra;
        const bool novikov = holds("novikov-dialgebra", t.to_bundle());
        const bool compat = compatible(double_structures_pre(in.split, Validate::Skip));
        out.push_back({in.source,
                       {{"pre_leibniz", pre}, {"transformed_novikov_dialgebra", novikov}, {"double_compatible", compat}},
                       pre && novikov == compat});
    }
    return out;
}

std::vector<SuiteInstance> affinization_iff_gd(Rng& rng, std::size_t samples)
{
    std::vector<std::pair<std::string, AlgebraBundle>> inputs = fixtures_with({"circ", "vdash", "dashv"});
    for (std::size_t i = 0; i < samples; ++i) {
        switch (rng.uniform(0, 2)) {
        case 0:
            inputs.emplace_back(label("gd-dialgebra", i), random_gd_dialgebra(rng, 3));
            break;
        case 1: {
            AlgebraBundle b = random_gd_dialgebra(rng, 3);
            const std::vector<std::string> names = {"circ", "vdash", "dashv"};
            const std::string& target = rng.pick(names);
            const MultTable changed = mutate(rng, b.product(target));
            b.products[target] = changed;
            inputs.emplace_back(label("mutated-gd-dialgebra", i), std::move(b));
            break;
        }
        default: {
            const auto n = static_cast<std::size_t>(rng.uniform(1, 2));
            AlgebraBundle b(n);
            b.add("circ", random_table(rng, n, 30)).add("vdash", random_table(rng, n, 30)).add("dashv", random_table(rng, n, 30));
            inputs.emplace_back(label("random-tables", i), std::move(b));
            break;
        }
        }
    }
    std::vector<SuiteInstance> out;
    for (const auto& [source, b] : inputs) {
        AlgebraBundle core(b.dim);
        core.add("circ", b.product("circ")).add("vdash", b.product("vdash")).add("dashv", b.product("dashv"));
        const bool grid = leibniz_grid_check(core).holds;
        const bool gd = holds("gd-dialgebra", core);
        out.push_back({source, {{"affinization_leibniz", grid}, {"gd_dialgebra", gd}}, grid == gd});
    }
    return out;
}

struct SuiteDef {
    std::string statement;
    std::function<std::vector<SuiteInstance>(Rng&, std::size_t)> run;
};

const std::map<std::string, SuiteDef>& suites()
{
    static const std::map<std::string, SuiteDef> table = {
        {"thm-2-12", {"an invertible T is an anti-O operator iff the split it induces on the algebra is anti-pre-Leibniz and sums to circ", anti_o_iff_split}},
        {"thm-2-14", {"a nondegenerate skew 2-cocycle yields a compatible anti-pre-Leibniz split, the two representation equivalences, and an invertible anti-O operator whose split is the same", cocycle_splitting}},
        {"prop-2-9", {"an invertible anti-O operator is strong", invertible_anti_o_is_strong}},
        {"prop-2-16", {"omega_p is a nondegenerate skew 2-cocycle on the semidirect product with (-L_succ*, L_succ* + R_prec*)", omega_p_on_double}},
        {"prop-2-22", {"a nondegenerate skew form is a 2-cocycle iff it is invariant on the split it determines", cocycle_iff_split_invariant}},
        {"prop-3-5", {"admissible Novikov dialgebras are anti-pre-Leibniz", admissible_is_anti_pre_leibniz}},
        {"prop-3-6", {"for a transformed pre-Leibniz pair, the minus2 image is anti-pre-Leibniz iff the pair is a Novikov dialgebra, and is then admissible", minus2_image}},
        {"prop-3-7", {"for an anti-pre-Leibniz pair, the plus2 image is transformed pre-Leibniz iff the pair is admissible, and is then a Novikov dialgebra", plus2_image}},
        {"prop-3-9", {"the double structures of an anti-pre-Leibniz pair are compatible iff the pair is admissible", apl_doubles_compatible}},
        {"prop-3-10", {"the double structures of a pre-Leibniz pair are compatible iff its transform is a Novikov dialgebra", pre_doubles_compatible}},
        {"prop-3-13", {"the affinization is Leibniz for all degrees iff (circ, vdash, dashv) is a GD dialgebra", affinization_iff_gd}},
    };
    return table;
}

const SuiteDef& suite(const std::string& name)
{
    const auto& all = suites();
    auto it = all.find(name);
    if (it == all.end())
        throw Error(ErrorKind::UnknownSuite, "no suite named '" + name + "'");
    return it->second;
}

} // namespace

std::size_t SuiteReport::agree_count() const
{
    std::size_t n = 0;
    for (const auto& inst : instances)
        n += inst.agrees ? 1 : 0;
    return n;
}

nlohmann::json SuiteReport::to_json() const
{
    nlohmann::json list = nlohmann::json::array();
    for (const auto& inst : instances) {
        nlohmann::json verdicts = nlohmann::json::object();
        for (const auto& [name, value] : inst.verdicts)
            verdicts[name] = value;
        list.push_back({{"source", inst.source}, {"verdicts", verdicts}, {"agrees", inst.agrees}});
    }
    const std::size_t agree = agree_count();
    return {{"suite", suite},
            {"statement", suite_statement(suite)},
            {"seed", seed},
            {"samples", samples},
            {"instances", list},
            {"agree", agree},
            {"disagree", instances.size() - agree},
            {"holds", holds()}};
}

std::vector<std::string> suite_names()
{
    std::vector<std::string> out;
    for (const auto& [name, def] : suites())
        out.push_back(name);
    return out;
}

std::string suite_statement(const std::string& name)
{
    return suite(name).statement;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t samples)
{
    const SuiteDef& def = suite(name);
    Rng rng(seed);
    return SuiteReport{name, seed, samples, def.run(rng, samples)};
}

} // namespace nalg
