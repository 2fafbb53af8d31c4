#include "nalg/error.hpp"
#include "nalg/identity.hpp"

#include <map>

namespace nalg {

namespace {

struct Spec {
    std::vector<std::string> equations;
    std::vector<std::string> products;
    std::vector<std::string> forms;
    std::vector<std::string> maps;
    std::vector<DerivedProduct> derived;
    bool per_product = false;
};

// Leibniz and Jacobi share the left-derivation shape.
std::string left_leibniz(const std::string& p)
{
    return p + "(x," + p + "(y,z)) = " + p + "(" + p + "(x,y),z) + " + p + "(y," + p + "(x,z))";
}

const DerivedProduct circ_from_split{"circ", {{1, "succ"}, {1, "prec"}}};

const std::string anti_pre_1 = "prec(circ(x,y),z) = succ(x,circ(y,z)) - succ(y,circ(x,z))";
const std::string anti_pre_2 = "succ(circ(x,y),z) = succ(y,succ(x,z)) - succ(x,succ(y,z))";
const std::string anti_pre_3 = "prec(x,circ(y,z)) = prec(succ(y,x),z) - succ(y,prec(x,z))";
const std::string anti_pre_4 = "prec(succ(x,y),z) = -prec(prec(y,x),z)";
const std::string anti_pre_alt = "succ(circ(x,y),z) = prec(x,circ(y,z)) - prec(y,circ(x,z))";

const std::string nd_1 = "vdash(x,vdash(y,z)) = vdash(vdash(x,y),z) - vdash(dashv(y,x),z) + vdash(y,vdash(x,z))";
const std::string nd_2 = "dashv(vdash(y,z),x) = vdash(y,dashv(z,x)) - dashv(z,vdash(y,x)) + dashv(dashv(z,y),x)";
const std::string nd_3 = "dashv(z,vdash(x,y)) = dashv(z,dashv(x,y))";
const std::string nd_4 = "dashv(dashv(z,y),x) = dashv(dashv(z,x),y)";
const std::string nd_5a = "vdash(dashv(y,x),z) = dashv(vdash(y,z),x)";
const std::string nd_5b = "dashv(vdash(y,z),x) = vdash(vdash(y,x),z)";

std::vector<std::string> novikov_dialgebra_equations()
{
    return {nd_1, nd_2, nd_3, nd_4, nd_5a, nd_5b};
}

std::map<std::string, Spec, std::less<>> specs()
{
    std::map<std::string, Spec, std::less<>> s;

    s["leibniz"] = {{left_leibniz("circ")}, {"circ"}, {}, {}, {}};
    s["quadratic-leibniz-invariance"] = {{"omega(x,circ(y,z)) = omega(circ(x,z) + circ(z,x),y)"}, {"circ"}, {"omega"}, {}, {}};
    s["two-cocycle"] = {{"omega(z,circ(x,y)) = omega(x,circ(y,z) + circ(z,y)) - omega(y,circ(x,z))"}, {"circ"}, {"omega"}, {}, {}};

    s["anti-pre-leibniz"] = {{anti_pre_1, anti_pre_2, anti_pre_3, anti_pre_4}, {"succ", "prec"}, {}, {}, {circ_from_split}};
    s["anti-pre-leibniz-alt"] = {{anti_pre_2, anti_pre_3, anti_pre_4, anti_pre_alt}, {"succ", "prec"}, {}, {}, {circ_from_split}};
    s["admissible-novikov-dialgebra"] = {
        {anti_pre_2, anti_pre_3, anti_pre_4,
         "succ(succ(x,y),z) = -succ(prec(y,x),z)",
         "prec(x,prec(y,z)) - prec(y,prec(x,z)) = 2*prec(prec(x,y),z) - 2*prec(prec(y,x),z)",
         "succ(succ(x,y),z) + prec(y,succ(x,z)) = 2*succ(x,circ(y,z))"},
        {"succ", "prec"}, {}, {}, {circ_from_split}};
    s["apl-invariance"] = {
        {"omega(succ(x,y),z) = omega(y,circ(x,z))",
         "omega(prec(x,y),z) = -omega(x,circ(y,z) + circ(z,y))"},
        {"succ", "prec"}, {"omega"}, {}, {circ_from_split}};

    s["pre-leibniz"] = {
        {"rhd(x,rhd(y,z)) = rhd(rhd(x,y),z) + rhd(lhd(x,y),z) + rhd(y,rhd(x,z))",
         "lhd(x,rhd(y,z)) = rhd(y,lhd(x,z)) - lhd(rhd(y,x),z) - lhd(x,lhd(y,z))",
         "lhd(rhd(x,y),z) = -lhd(lhd(y,x),z)"},
        {"rhd", "lhd"}, {}, {}, {}};
    s["transformed-pre-leibniz"] = {{nd_1, nd_2, nd_3}, {"vdash", "dashv"}, {}, {}, {}};
    s["novikov-dialgebra"] = {novikov_dialgebra_equations(), {"vdash", "dashv"}, {}, {}, {}};

    s["perm"] = {{"star(x,star(y,z)) = star(star(x,y),z)", "star(star(x,y),z) = star(star(y,x),z)"}, {"star"}, {}, {}, {}};
    s["quadratic-perm-invariance"] = {{"omega(star(x,y),z) = omega(x,star(y,z) - star(z,y))"}, {"star"}, {"omega"}, {}, {}};

    s["averaging"] = {{"mul(P(x),P(y)) = P(mul(P(x),y))", "mul(P(x),P(y)) = P(mul(x,P(y)))"}, {}, {}, {"P"}, {}, true};
    s["derivation"] = {{"P(mul(x,y)) = mul(P(x),y) + mul(x,P(y))"}, {}, {}, {"P"}, {}, true};

    s["compatible-leibniz"] = {
        {left_leibniz("circ1"), left_leibniz("circ2"),
         "circ2(x,circ1(y,z)) + circ1(x,circ2(y,z)) = circ2(circ1(x,y),z) + circ1(circ2(x,y),z) + circ2(y,circ1(x,z)) + circ1(y,circ2(x,z))"},
        {"circ1", "circ2"}, {}, {}, {}};

    const std::string antisymmetry = "bracket(x,y) = -bracket(y,x)";
    const std::string novikov_rc = "ast(ast(x,y),z) = ast(ast(x,z),y)";
    const std::string novikov_ls = "ast(ast(x,y),z) - ast(x,ast(y,z)) = ast(ast(y,x),z) - ast(y,ast(x,z))";
    s["lie"] = {{antisymmetry, left_leibniz("bracket")}, {"bracket"}, {}, {}, {}};
    s["novikov"] = {{novikov_rc, novikov_ls}, {"ast"}, {}, {}, {}};
    s["gd-algebra"] = {
        {antisymmetry, left_leibniz("bracket"), novikov_rc, novikov_ls,
         "bracket(ast(x,y),z) - bracket(ast(x,z),y) + ast(bracket(x,y),z) - ast(bracket(x,z),y) - ast(x,bracket(y,z)) = 0"},
        {"bracket", "ast"}, {}, {}, {}};

    std::vector<std::string> gd_di{left_leibniz("circ")};
    for (auto& e : novikov_dialgebra_equations())
        gd_di.push_back(e);
    gd_di.push_back("vdash(x,circ(y,z)) - circ(vdash(x,y),z) - vdash(circ(x,y),z) - circ(y,vdash(x,z)) + dashv(circ(x,z),y) = 0");
    gd_di.push_back("circ(x,vdash(y,z)) - dashv(circ(y,z),x) + circ(dashv(y,x),z) - vdash(circ(x,y),z) - vdash(y,circ(x,z)) = 0");
    gd_di.push_back("circ(x,dashv(z,y)) + dashv(circ(y,z),x) - dashv(z,circ(x,y)) - circ(y,dashv(z,x)) - dashv(circ(x,z),y) = 0");
    s["gd-dialgebra"] = {gd_di, {"circ", "vdash", "dashv"}, {}, {}, {}};

    return s;
}

std::map<std::string, IdentitySystem, std::less<>> build()
{
    std::map<std::string, IdentitySystem, std::less<>> out;
    for (auto& [name, spec] : specs()) {
        IdentitySystem sys;
        sys.name = name;
        for (const auto& text : spec.equations)
            sys.equations.push_back(parse_equation(text, spec.forms));
        sys.required_products = spec.products;
        sys.required_forms = spec.forms;
        sys.required_maps = spec.maps;
        sys.derived = spec.derived;
        sys.per_product = spec.per_product;
        out.emplace(name, std::move(sys));
    }
    return out;
}

const std::map<std::string, IdentitySystem, std::less<>>& table()
{
    static const auto systems = build();
    return systems;
}

} // namespace

const IdentitySystem& registry(std::string_view name)
{
    const auto& t = table();
    auto it = t.find(name);
    if (it == t.end())
        throw Error(ErrorKind::UnknownSystem, "no identity system named '" + std::string(name) + "'");
    return it->second;
}

std::vector<std::string> registry_names()
{
    std::vector<std::string> names;
    for (const auto& [name, sys] : table())
        names.push_back(name);
    return names;
}

} // namespace nalg
