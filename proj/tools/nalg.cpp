// nalg: command-line front end. Exit status 0 means the checked property
// holds, 2 that it is violated (or a construction precondition fails), 1 an
// operational error such as bad input or an unknown name.

#include "nalg/affinization.hpp"
#include "nalg/catalog.hpp"
#include "nalg/constructions.hpp"
#include "nalg/error.hpp"
#include "nalg/identity.hpp"
#include "nalg/io.hpp"
#include "nalg/representations.hpp"
#include "nalg/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

using namespace nalg;
using nlohmann::json;

namespace {

constexpr int exit_holds = 0;
constexpr int exit_error = 1;
constexpr int exit_violated = 2;

constexpr const char* seed_variable = "NALG_SEED";

int emit(json report, int code)
{
    report["exit_code"] = code;
    std::cout << report.dump(2) << "\n";
    return code;
}

bool is_precondition(ErrorKind k)
{
    switch (k) {
    case ErrorKind::DegenerateForm:
    case ErrorKind::NotSkew:
    case ErrorKind::NotCocycle:
    case ErrorKind::NotAntiO:
    case ErrorKind::NotPerm:
    case ErrorKind::OperatorAxiomFails:
    case ErrorKind::NotAntiPreLeibniz:
    case ErrorKind::NotPreLeibniz:
    case ErrorKind::NotNovikovDialgebra:
    case ErrorKind::NotGDAlgebra:
    case ErrorKind::NotGDDialgebra:
    case ErrorKind::PreconditionFailed:
        return true;
    default:
        return false;
    }
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

// ---- check ------------------------------------------------------------------

struct CheckOptions {
    std::string system;
    std::string input;
    std::string products;
    std::string form;
    std::string map;
};

int run_check(const CheckOptions& o)
{
    const AlgebraBundle bundle = load_bundle(o.input);
    json report = {{"command", "check"}, {"system", o.system}, {"input", o.input}};
    CheckReport result;
    if (o.system == "affinized-leibniz") {
        result = leibniz_grid_check(bundle);
    } else {
        IdentitySystem sys = registry(o.system);
        std::map<std::string, std::string> names;
        const auto products = split_list(o.products);
        if (!sys.per_product) {
            if (products.size() > sys.required_products.size())
                throw Error(ErrorKind::UnknownName, "system '" + o.system + "' uses only " +
                                                        std::to_string(sys.required_products.size()) + " products");
            for (std::size_t i = 0; i < products.size(); ++i)
                names[sys.required_products[i]] = products[i];
        }
        if (!o.form.empty())
            for (const auto& f : sys.required_forms)
                names[f] = o.form;
        if (!o.map.empty())
            for (const auto& m : sys.required_maps)
                names[m] = o.map;
        if (!names.empty())
            sys = rename_system(sys, names);
        sys = instantiate(sys, bundle, sys.per_product ? products : std::vector<std::string>{});
        result = check_system(sys, bundle);
    }
    report["holds"] = result.holds;
    if (result.counterexample)
        report["counterexample"] = result.to_json()["counterexample"];
    return emit(report, result.holds ? exit_holds : exit_violated);
}

// ---- construct --------------------------------------------------------------

struct ConstructContext {
    const AlgebraBundle& in;
    Validate validate;
    std::string form;
    std::string map;
};

SplitPair input_split(const ConstructContext& c, SplitFlavor flavor)
{
    return SplitPair::from_bundle(c.in, flavor);
}

AlgebraBundle split_bundle(const SplitPair& s)
{
    return s.to_bundle();
}

struct Operation {
    std::string summary;
    std::vector<std::string> preconditions;
    std::function<AlgebraBundle(const ConstructContext&)> run;
};

const std::map<std::string, Operation>& operations()
{
    static const std::map<std::string, Operation> ops = {
        {"levi-civita",
         {"lozenge and blacklozenge from circ and a skew nondegenerate form",
          {"skew", "nondegenerate"},
          [](const ConstructContext& c) {
              const LeviCivita lc = levi_civita(c.in.product("circ"), c.in.form(c.form));
              AlgebraBundle out(c.in.dim);
              out.add("lozenge", lc.lozenge).add("blacklozenge", lc.blacklozenge);
              return out;
          }}},
        {"levi-civita-from-cocycle",
         {"(succ, prec) from circ and a nondegenerate skew 2-cocycle",
          {"skew", "nondegenerate", "two-cocycle"},
          [](const ConstructContext& c) {
              return split_bundle(levi_civita_from_cocycle(c.in.product("circ"), c.in.form(c.form), c.validate));
          }}},
        {"anti-o-split-coadjoint",
         {"(succ, prec) from the inverse of the flat map of a form, as an anti-O operator for the coadjoint representation",
          {"anti-o"},
          [](const ConstructContext& c) {
              const MultTable& circ = c.in.product("circ");
              return split_bundle(compatible_split_from_invertible_anti_O(invert(form_flat(c.in.form(c.form))), circ,
                                                                          coadjoint_rep(circ), c.validate));
          }}},
        {"minus2-transform",
         {"(succ, prec) from (vdash, dashv)", {},
          [](const ConstructContext& c) { return split_bundle(minus2_transform(input_split(c, SplitFlavor::NovikovDialgebra))); }}},
        {"plus2-transform",
         {"(vdash, dashv) from (succ, prec)", {},
          [](const ConstructContext& c) { return split_bundle(plus2_transform(input_split(c, SplitFlavor::AntiPreLeibniz))); }}},
        {"transformed-from-pre",
         {"(vdash, dashv) from (rhd, lhd)", {},
          [](const ConstructContext& c) { return split_bundle(transformed_from_pre(input_split(c, SplitFlavor::PreLeibniz))); }}},
        {"pre-from-transformed",
         {"(rhd, lhd) from (vdash, dashv)", {},
          [](const ConstructContext& c) { return split_bundle(pre_from_transformed(input_split(c, SplitFlavor::Transformed))); }}},
        {"double-structures-apl",
         {"circ1d and circ2d on A + A* from (succ, prec)",
          {"anti-pre-leibniz"},
          [](const ConstructContext& c) {
              const auto d = double_structures_apl(input_split(c, SplitFlavor::AntiPreLeibniz), c.validate);
              AlgebraBundle out(d.first.dim());
              out.add("circ1d", d.first).add("circ2d", d.second);
              return out;
          }}},
        {"double-structures-pre",
         {"bullet1d and bullet2d on A + A* from (rhd, lhd)",
          {"pre-leibniz"},
          [](const ConstructContext& c) {
              const auto d = double_structures_pre(input_split(c, SplitFlavor::PreLeibniz), c.validate);
              AlgebraBundle out(d.first.dim());
              out.add("bullet1d", d.first).add("bullet2d", d.second);
              return out;
          }}},
        {"perm-to-leibniz-derivation",
         {"circ(x,y) = P(x) star y - x star P(y) for a derivation P",
          {"perm", "derivation"},
          [](const ConstructContext& c) {
              AlgebraBundle out(c.in.dim);
              out.add("circ", perm_to_leibniz(c.in.product("star"), c.in.map(c.map).matrix, OperatorMode::Derivation, c.validate));
              return out;
          }}},
        {"perm-to-leibniz-averaging",
         {"circ(x,y) = P(x) star y - x star P(y) for an averaging operator P",
          {"perm", "averaging"},
          [](const ConstructContext& c) {
              AlgebraBundle out(c.in.dim);
              out.add("circ", perm_to_leibniz(c.in.product("star"), c.in.map(c.map).matrix, OperatorMode::Averaging, c.validate));
              return out;
          }}},
        {"gd-from-novikov-di",
         {"(circ, vdash, dashv) with circ(x,y) = x vdash y - y dashv x",
          {"novikov-dialgebra"},
          [](const ConstructContext& c) { return gd_from_novikov_di(input_split(c, SplitFlavor::NovikovDialgebra), c.validate); }}},
        {"gd-from-averaging",
         {"(circ, vdash, dashv) from a GD algebra (bracket, ast) and an averaging operator P",
          {"gd-algebra", "averaging"},
          [](const ConstructContext& c) {
              return gd_from_averaging(c.in.product("bracket"), c.in.product("ast"), c.in.map(c.map).matrix, c.validate);
          }}},
        {"derivation-product",
         {"dot(x,y) = circ(x,y) + P(x) vdash y - P(y) dashv x",
          {"gd-dialgebra", "derivation"},
          [](const ConstructContext& c) {
              AlgebraBundle out(c.in.dim);
              out.add("dot", derivation_product(c.in, c.in.map(c.map).matrix, c.validate));
              return out;
          }}},
        {"semidirect-adjoint",
         {"circ on A + A with the adjoint representation", {},
          [](const ConstructContext& c) {
              const MultTable& circ = c.in.product("circ");
              AlgebraBundle out(2 * c.in.dim);
              out.add("circ", semidirect_leibniz(circ, adjoint_rep(circ)));
              return out;
          }}},
        {"semidirect-coadjoint",
         {"circ on A + A* with the coadjoint representation", {},
          [](const ConstructContext& c) {
              const MultTable& circ = c.in.product("circ");
              AlgebraBundle out(2 * c.in.dim);
              out.add("circ", semidirect_leibniz(circ, coadjoint_rep(circ)));
              return out;
          }}},
        {"semidirect-apl-adjoint",
         {"(succ, prec) on A + A with the adjoint quadruple", {},
          [](const ConstructContext& c) {
              const SplitPair s = input_split(c, SplitFlavor::AntiPreLeibniz);
              return split_bundle(semidirect_apl(s, apl_adjoint_rep(s)));
          }}},
        {"semidirect-apl-coadjoint",
         {"(succ, prec) on A + A* with the dual of the adjoint quadruple", {},
          [](const ConstructContext& c) {
              const SplitPair s = input_split(c, SplitFlavor::AntiPreLeibniz);
              return split_bundle(semidirect_apl(s, dual_apl_rep(apl_adjoint_rep(s))));
          }}},
        {"cocycle-double",
         {"circ on A + A* with (-L_succ*, L_succ* + R_prec*) and omega = omega_p",
          {"anti-pre-leibniz"},
          [](const ConstructContext& c) {
              const SplitPair s = input_split(c, SplitFlavor::AntiPreLeibniz);
              if (c.validate == Validate::Check && !holds("anti-pre-leibniz", s.to_bundle()))
                  throw Error(ErrorKind::NotAntiPreLeibniz, "pair is not an anti-pre-Leibniz algebra");
              AlgebraBundle out(2 * s.dim());
              out.add("circ", semidirect_leibniz(s.sub_adjacent(), apl_twisted_dual_rep(s))).add("omega", omega_p(s.dim()));
              return out;
          }}},
    };
    return ops;
}

struct ConstructOptions {
    std::string op;
    std::string input;
    std::string output;
    bool force = false;
    std::optional<std::uint64_t> seed;
    std::string form = "omega";
    std::string map = "P";
};

int run_construct(const ConstructOptions& o)
{
    const auto& ops = operations();
    auto it = ops.find(o.op);
    if (it == ops.end())
        throw Error(ErrorKind::UnknownOperation, "no construction named '" + o.op + "'");
    const Operation& op = it->second;
    const AlgebraBundle in = load_bundle(o.input);
    json report = {{"command", "construct"},
                   {"op", o.op},
                   {"input", o.input},
                   {"output", o.output},
                   {"preconditions", op.preconditions},
                   {"validation", o.force ? "skipped" : "checked"}};
    if (o.seed)
        report["seed"] = *o.seed;
    try {
        const AlgebraBundle out = op.run({in, o.force ? Validate::Skip : Validate::Check, o.form, o.map});
        save_bundle(out, o.output);
        report["written"] = true;
        return emit(report, exit_holds);
    } catch (const Error& e) {
        if (!is_precondition(e.kind()))
            throw;
        report["written"] = false;
        report["precondition_failed"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
        return emit(report, exit_violated);
    }
}

// ---- verify-theorem ---------------------------------------------------------

std::uint64_t parse_seed(const std::string& text)
{
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || text.front() == '-')
        throw Error(ErrorKind::ParseError, "seed must be an unsigned 64-bit integer, got '" + text + "'");
    return value;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag)
{
    if (flag)
        return *flag;
    if (const char* env = std::getenv(seed_variable); env && *env)
        return parse_seed(env);
    return default_suite_seed;
}

int run_verify(const std::string& suite, const std::optional<std::uint64_t>& seed, std::size_t samples)
{
    if (suite == "list") {
        json list = json::array();
        for (const auto& name : suite_names())
            list.push_back({{"suite", name}, {"statement", suite_statement(name)}});
        std::cout << list.dump(2) << "\n";
        return exit_holds;
    }
    const SuiteReport r = run_suite(suite, resolve_seed(seed), samples);
    json report = r.to_json();
    report["command"] = "verify-theorem";
    return emit(report, r.holds() ? exit_holds : exit_violated);
}

// ---- catalog ----------------------------------------------------------------

int run_catalog_list()
{
    json list = json::array();
    for (const auto& name : fixture_names()) {
        const Fixture f = fixture(name);
        json products = json::array();
        for (const auto& [p, t] : f.bundle.products)
            products.push_back(p);
        list.push_back({{"name", name}, {"dim", f.bundle.dim}, {"products", products}, {"provenance", f.provenance}});
    }
    std::cout << list.dump(2) << "\n";
    return exit_holds;
}

int run_catalog_emit(const std::string& name)
{
    std::cout << bundle_to_json(fixture(name).bundle).dump(2) << "\n";
    return exit_holds;
}

int run_catalog_verify()
{
    json list = json::array();
    bool all = true;
    for (const auto& name : fixture_names()) {
        const Fixture f = fixture(name);
        for (const auto& claim : f.claims) {
            const bool observed = check_claim(f, claim).holds;
            all = all && observed == claim.holds;
            list.push_back({{"fixture", name}, {"system", claim.system}, {"claimed", claim.holds}, {"observed", observed}});
        }
    }
    return emit({{"command", "catalog verify"}, {"claims", list}, {"holds", all}}, all ? exit_holds : exit_violated);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact structure-constant toolkit for Leibniz-type algebras"};
    app.require_subcommand(1);
    std::string fixtures;
    app.add_option("--fixtures", fixtures, "Directory holding the fixture catalog (index.json)");

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Check an identity system on a bundle");
    check_cmd->add_option("--system", check.system, "Registry system, or affinized-leibniz")->required();
    check_cmd->add_option("--input", check.input, "Bundle JSON file")->required();
    check_cmd->add_option("--products", check.products,
                          "Comma-separated product names: the products a per-product system runs over, otherwise "
                          "replacements for the system's products in order");
    check_cmd->add_option("--form", check.form, "Bundle form to use in place of omega");
    check_cmd->add_option("--map", check.map, "Bundle map to use in place of P");

    ConstructOptions construct;
    std::string construct_seed;
    auto* construct_cmd = app.add_subcommand("construct", "Run a construction and write the resulting bundle");
    construct_cmd->add_option("--op", construct.op, "Construction name (see 'construct --list')");
    construct_cmd->add_option("--input", construct.input, "Bundle JSON file");
    construct_cmd->add_option("--output", construct.output, "Where to write the result");
    construct_cmd->add_flag("--force", construct.force, "Skip precondition checks");
    construct_cmd->add_option("--seed", construct_seed, "Recorded in the report");
    construct_cmd->add_option("--form", construct.form, "Bundle form to use (default omega)");
    construct_cmd->add_option("--map", construct.map, "Bundle map to use (default P)");
    bool list_ops = false;
    construct_cmd->add_flag("--list", list_ops, "List construction names");

    std::string suite;
    std::string verify_seed;
    std::size_t samples = default_suite_samples;
    auto* verify_cmd = app.add_subcommand(
        "verify-theorem", std::string("Run a theorem suite ('list' shows them); the seed defaults to $") + seed_variable);
    verify_cmd->add_option("suite", suite, "Suite id")->required();
    verify_cmd->add_option("--seed", verify_seed, "Generator seed");
    verify_cmd->add_option("--samples", samples, "Random instances on top of the fixtures");

    std::string emit_name;
    auto* catalog_cmd = app.add_subcommand("catalog", "Inspect the fixture catalog");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "List fixtures");
    auto* emit_cmd = catalog_cmd->add_subcommand("emit", "Print a fixture bundle");
    emit_cmd->add_option("name", emit_name)->required();
    auto* verify_catalog_cmd = catalog_cmd->add_subcommand("verify", "Re-check every recorded claim");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_holds : exit_error;
    }

    try {
        if (!fixtures.empty())
            set_fixture_dir(fixtures);
        if (*check_cmd)
            return run_check(check);
        if (*construct_cmd) {
            if (list_ops) {
                json list = json::array();
                for (const auto& [name, op] : operations())
                    list.push_back({{"op", name}, {"summary", op.summary}, {"preconditions", op.preconditions}});
                std::cout << list.dump(2) << "\n";
                return exit_holds;
            }
            if (construct.op.empty() || construct.input.empty() || construct.output.empty())
                throw Error(ErrorKind::ParseError, "construct needs --op, --input and --output");
            if (!construct_seed.empty())
                construct.seed = parse_seed(construct_seed);
            return run_construct(construct);
        }
        if (*verify_cmd) {
            std::optional<std::uint64_t> seed;
            if (!verify_seed.empty())
                seed = parse_seed(verify_seed);
            return run_verify(suite, seed, samples);
        }
        if (*list_cmd)
            return run_catalog_list();
        if (*emit_cmd)
            return run_catalog_emit(emit_name);
        if (*verify_catalog_cmd)
            return run_catalog_verify();
    } catch (const Error& e) {
        std::cerr << "nalg: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "nalg: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
