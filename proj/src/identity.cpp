#include "nalg/identity.hpp"
#include "nalg/error.hpp"
#include "nalg/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace nalg {

Term Term::variable(char v)
{
    Term t;
    t.kind = Kind::Var;
    t.var = v;
    return t;
}

Term Term::product(std::string name, Term a, Term b)
{
    Term t;
    t.kind = Kind::Prod;
    t.name = std::move(name);
    t.args = {std::move(a), std::move(b)};
    return t;
}

Term Term::map(std::string name, Term a)
{
    Term t;
    t.kind = Kind::Map;
    t.name = std::move(name);
    t.args = {std::move(a)};
    return t;
}

Term Term::scale(Rational c, Term a)
{
    Term t;
    t.kind = Kind::Scale;
    t.coef = std::move(c);
    t.args = {std::move(a)};
    return t;
}

Term Term::sum(std::vector<Term> parts)
{
    Term t;
    t.kind = Kind::Sum;
    t.args = std::move(parts);
    return t;
}

std::string Term::to_string() const
{
    switch (kind) {
    case Kind::Var: return std::string(1, var);
    case Kind::Prod: return name + "(" + args[0].to_string() + "," + args[1].to_string() + ")";
    case Kind::Map: return name + "(" + args[0].to_string() + ")";
    case Kind::Scale: return coef.to_string() + "*" + args[0].to_string();
    case Kind::Sum: {
        if (args.empty())
            return "0";
        std::string s = "(";
        for (std::size_t i = 0; i < args.size(); ++i)
            s += (i ? " + " : "") + args[i].to_string();
        return s + ")";
    }
    }
    return {};
}

namespace {

bool is_variable_name(std::string_view s)
{
    return s.size() == 1 && (s[0] == 'x' || s[0] == 'y' || s[0] == 'z' || s[0] == 'w');
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Term expr()
    {
        std::vector<Term> parts;
        skip();
        Rational sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        parts.push_back(signed_term(sign));
        for (;;) {
            skip();
            char c = peek();
            if (c != '+' && c != '-')
                break;
            ++pos_;
            parts.push_back(signed_term(c == '-' ? -1 : 1));
        }
        if (parts.size() == 1)
            return std::move(parts.front());
        return Term::sum(std::move(parts));
    }

    void expect(char c)
    {
        skip();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool at_end()
    {
        skip();
        return pos_ == text_.size();
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorKind::ParseError,
                    what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
    }

private:
    Term signed_term(const Rational& sign)
    {
        Term t = term();
        if (sign == 1)
            return t;
        return Term::scale(sign, std::move(t));
    }

    Term term()
    {
        skip();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Rational c = number();
            skip();
            if (peek() != '*') {
                if (!c.is_zero())
                    fail("a bare nonzero number is not a vector");
                return Term::zero();
            }
            ++pos_;
            return Term::scale(c, factor());
        }
        return factor();
    }

    Term factor()
    {
        skip();
        if (peek() == '(') {
            ++pos_;
            Term t = expr();
            expect(')');
            return t;
        }
        std::string name = identifier();
        skip();
        if (peek() != '(') {
            if (!is_variable_name(name))
                fail("'" + name + "' is not a variable (use x, y, z or w)");
            return Term::variable(name[0]);
        }
        ++pos_;
        Term a = expr();
        skip();
        if (peek() == ',') {
            ++pos_;
            Term b = expr();
            expect(')');
            return Term::product(name, std::move(a), std::move(b));
        }
        expect(')');
        return Term::map(name, std::move(a));
    }

    std::string identifier()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start])))
            fail("expected an identifier");
        return std::string(text_.substr(start, pos_ - start));
    }

    Rational number()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        return Rational::parse(text_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void collect_variables(const Term& t, std::set<char>& out)
{
    if (t.kind == Term::Kind::Var)
        out.insert(t.var);
    for (const auto& a : t.args)
        collect_variables(a, out);
}

bool mentions(const Term& t, const std::vector<std::string>& names)
{
    if (t.kind == Term::Kind::Prod && std::find(names.begin(), names.end(), t.name) != names.end())
        return true;
    for (const auto& a : t.args)
        if (mentions(a, names))
            return true;
    return false;
}

// Flattens a scalar expression into c * form(s, t) summands.
void flatten_form(const Term& t, const Rational& coef, const std::vector<std::string>& forms,
                  std::vector<FormSummand>& out, std::string& form, std::string_view text)
{
    auto fail = [&](const std::string& what) {
        throw Error(ErrorKind::ParseError, what + " in '" + std::string(text) + "'");
    };
    switch (t.kind) {
    case Term::Kind::Sum:
        for (const auto& a : t.args)
            flatten_form(a, coef, forms, out, form, text);
        return;
    case Term::Kind::Scale:
        flatten_form(t.args[0], coef * t.coef, forms, out, form, text);
        return;
    case Term::Kind::Prod:
        if (std::find(forms.begin(), forms.end(), t.name) == forms.end())
            fail("vector term '" + t.to_string() + "' mixed into a scalar identity");
        if (form.empty())
            form = t.name;
        else if (form != t.name)
            fail("scalar identity uses more than one form");
        if (mentions(t.args[0], forms) || mentions(t.args[1], forms))
            fail("form nested inside a form argument");
        out.push_back({coef, t.args[0], t.args[1]});
        return;
    default:
        fail("vector term '" + t.to_string() + "' mixed into a scalar identity");
    }
}

} // namespace

Term parse_term(std::string_view text)
{
    Parser p(text);
    Term t = p.expr();
    if (!p.at_end())
        p.fail("unexpected trailing input");
    return t;
}

Equation parse_equation(std::string_view text, const std::vector<std::string>& form_names)
{
    Parser p(text);
    Equation eq;
    eq.text = std::string(text);
    eq.lhs = p.expr();
    p.expect('=');
    eq.rhs = p.expr();
    if (!p.at_end())
        p.fail("unexpected trailing input");

    std::set<char> vars;
    collect_variables(eq.lhs, vars);
    collect_variables(eq.rhs, vars);
    for (char v : {'x', 'y', 'z', 'w'})
        if (vars.count(v))
            eq.variables.push_back(v);

    if (mentions(eq.lhs, form_names) || mentions(eq.rhs, form_names)) {
        eq.kind = Equation::Kind::Form;
        flatten_form(eq.lhs, 1, form_names, eq.summands, eq.form, text);
        flatten_form(eq.rhs, -1, form_names, eq.summands, eq.form, text);
        eq.lhs = Term::zero();
        eq.rhs = Term::zero();
    }
    return eq;
}

Vector evaluate_term(const Term& term, const AlgebraBundle& bundle, const Assignment& values)
{
    switch (term.kind) {
    case Term::Kind::Var: {
        auto it = values.find(term.var);
        if (it == values.end())
            throw Error(ErrorKind::UnassignedVariable, std::string("variable '") + term.var + "' has no value");
        if (it->second.size() != bundle.dim)
            throw Error(ErrorKind::DimensionMismatch, "assigned vector length differs from bundle dimension");
        return it->second;
    }
    case Term::Kind::Prod: {
        const MultTable& t = bundle.product(term.name);
        return multiply(t, evaluate_term(term.args[0], bundle, values), evaluate_term(term.args[1], bundle, values));
    }
    case Term::Kind::Map:
        return bundle.map(term.name)(evaluate_term(term.args[0], bundle, values));
    case Term::Kind::Scale: {
        if (term.coef.is_zero())
            return Vector(bundle.dim);
        Vector v = evaluate_term(term.args[0], bundle, values);
        v *= term.coef;
        return v;
    }
    case Term::Kind::Sum: {
        Vector acc(bundle.dim);
        for (const auto& a : term.args)
            acc += evaluate_term(a, bundle, values);
        return acc;
    }
    }
    return Vector(bundle.dim);
}

bool Defect::is_zero() const
{
    if (vector)
        return vector->is_zero();
    return !scalar || scalar->is_zero();
}

nlohmann::json Defect::to_json() const
{
    if (vector)
        return vector_to_json(*vector);
    return scalar ? scalar->to_string() : "0";
}

Defect equation_defect(const Equation& eq, const AlgebraBundle& bundle, const Assignment& values)
{
    Defect d;
    if (eq.kind == Equation::Kind::Vector) {
        d.vector = evaluate_term(eq.lhs, bundle, values) - evaluate_term(eq.rhs, bundle, values);
        return d;
    }
    const BilinearForm& w = bundle.form(eq.form);
    Rational s;
    for (const auto& term : eq.summands) {
        if (term.coef.is_zero())
            continue;
        s += term.coef * w(evaluate_term(term.left, bundle, values), evaluate_term(term.right, bundle, values));
    }
    d.scalar = s;
    return d;
}

nlohmann::json CheckReport::to_json() const
{
    nlohmann::json j;
    j["holds"] = holds;
    if (counterexample) {
        const auto& c = *counterexample;
        nlohmann::json cj;
        cj["equation"] = c.equation;
        cj["identity"] = c.text;
        nlohmann::json basis = nlohmann::json::object();
        for (std::size_t i = 0; i < c.variables.size(); ++i)
            basis[std::string(1, c.variables[i])] = c.basis[i];
        cj["basis"] = std::move(basis);
        if (c.degrees)
            cj["degrees"] = {(*c.degrees)[0], (*c.degrees)[1], (*c.degrees)[2]};
        cj["defect"] = c.defect.to_json();
        j["counterexample"] = std::move(cj);
    }
    return j;
}

AlgebraBundle with_derived(const IdentitySystem& sys, const AlgebraBundle& bundle)
{
    if (sys.derived.empty())
        return bundle;
    AlgebraBundle out = bundle;
    for (const auto& d : sys.derived) {
        MultTable t(bundle.dim);
        for (const auto& [c, part] : d.parts)
            t = table_combine(1, t, c, out.product(part));
        out.products.insert_or_assign(d.name, std::move(t));
    }
    return out;
}

namespace {

void rename_term(Term& t, const std::map<std::string, std::string>& names)
{
    if (t.kind == Term::Kind::Prod || t.kind == Term::Kind::Map) {
        auto it = names.find(t.name);
        if (it != names.end())
            t.name = it->second;
    }
    for (auto& a : t.args)
        rename_term(a, names);
}

std::string renamed(const std::string& s, const std::map<std::string, std::string>& names)
{
    auto it = names.find(s);
    return it == names.end() ? s : it->second;
}

} // namespace

IdentitySystem rename_system(const IdentitySystem& sys, const std::map<std::string, std::string>& names)
{
    IdentitySystem out = sys;
    for (auto& eq : out.equations) {
        rename_term(eq.lhs, names);
        rename_term(eq.rhs, names);
        eq.form = renamed(eq.form, names);
        for (auto& s : eq.summands) {
            rename_term(s.left, names);
            rename_term(s.right, names);
        }
    }
    for (auto* list : {&out.required_products, &out.required_forms, &out.required_maps})
        for (auto& s : *list)
            s = renamed(s, names);
    for (auto& d : out.derived) {
        d.name = renamed(d.name, names);
        for (auto& part : d.parts)
            part.second = renamed(part.second, names);
    }
    return out;
}

IdentitySystem instantiate(const IdentitySystem& sys, const AlgebraBundle& bundle, const std::vector<std::string>& products)
{
    if (!sys.per_product)
        return sys;
    std::vector<std::string> names = products;
    if (names.empty())
        for (const auto& [name, t] : bundle.products)
            names.push_back(name);

    IdentitySystem out = sys;
    out.per_product = false;
    out.equations.clear();
    out.required_products.clear();
    for (const auto& name : names) {
        IdentitySystem one = rename_system(sys, {{"mul", name}});
        for (auto& eq : one.equations) {
            eq.text = "[" + name + "] " + eq.text;
            out.equations.push_back(std::move(eq));
        }
        out.required_products.push_back(name);
    }
    return out;
}

namespace {

// Calls visit(equation index, tuple, defect) for every basis tuple in
// (equation, lexicographic tuple) order until visit returns false.
template <typename Visit>
void for_each_defect(const IdentitySystem& system, const AlgebraBundle& input, Visit&& visit)
{
    const IdentitySystem sys = instantiate(system, input);
    input.validate();
    for (const auto& d : sys.derived)
        for (const auto& part : d.parts)
            input.product(part.second);
    const AlgebraBundle bundle = with_derived(sys, input);
    for (const auto& p : sys.required_products)
        bundle.product(p);
    for (const auto& f : sys.required_forms)
        bundle.form(f);
    for (const auto& m : sys.required_maps)
        bundle.map(m);

    const std::size_t n = bundle.dim;
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < n; ++i)
        basis.push_back(Vector::basis(n, i));

    for (std::size_t e = 0; e < sys.equations.size(); ++e) {
        const Equation& eq = sys.equations[e];
        const std::size_t k = eq.variables.size();
        std::vector<std::size_t> tuple(k, 0);
        Assignment values;
        for (bool more = true; more;) {
            for (std::size_t v = 0; v < k; ++v)
                values[eq.variables[v]] = basis[tuple[v]];
            if (!visit(sys, e, tuple, equation_defect(eq, bundle, values)))
                return;
            more = false;
            for (std::size_t pos = k; pos-- > 0;) {
                if (++tuple[pos] < n) {
                    more = true;
                    break;
                }
                tuple[pos] = 0;
            }
        }
    }
}

} // namespace

CheckReport check_system(const IdentitySystem& system, const AlgebraBundle& input)
{
    CheckReport report;
    for_each_defect(system, input,
                    [&](const IdentitySystem& sys, std::size_t e, const std::vector<std::size_t>& tuple, Defect d) {
                        if (d.is_zero())
                            return true;
                        const Equation& eq = sys.equations[e];
                        report.holds = false;
                        report.counterexample = Counterexample{e, eq.text, eq.variables, tuple, std::move(d), std::nullopt};
                        return false;
                    });
    return report;
}

std::vector<Rational> defect_coordinates(const IdentitySystem& system, const AlgebraBundle& bundle)
{
    std::vector<Rational> out;
    for_each_defect(system, bundle, [&](const IdentitySystem&, std::size_t, const std::vector<std::size_t>&, Defect d) {
        if (d.vector)
            for (const auto& c : d.vector->entries())
                out.push_back(c);
        else
            out.push_back(d.scalar ? *d.scalar : Rational());
        return true;
    });
    return out;
}

CheckReport check_system(std::string_view registry_name, const AlgebraBundle& bundle)
{
    return check_system(registry(registry_name), bundle);
}

bool holds(std::string_view registry_name, const AlgebraBundle& bundle)
{
    return check_system(registry(registry_name), bundle).holds;
}

} // namespace nalg
