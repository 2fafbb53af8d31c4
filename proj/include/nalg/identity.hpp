#pragma once

#include "nalg/algebra.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nalg {

/// Expression tree for one side of a multilinear identity.
struct Term {
    enum class Kind { Var, Prod, Map, Scale, Sum };

    Kind kind = Kind::Sum;
    char var = 0;         // Var
    std::string name;     // Prod, Map
    Rational coef;        // Scale
    std::vector<Term> args;

    static Term variable(char v);
    static Term product(std::string name, Term a, Term b);
    static Term map(std::string name, Term a);
    static Term scale(Rational c, Term a);
    static Term sum(std::vector<Term> parts);
    static Term zero() { return sum({}); }

    std::string to_string() const;
};

/// One c * form(left, right) summand of a scalar identity.
struct FormSummand {
    Rational coef;
    Term left;
    Term right;
};

struct Equation {
    enum class Kind { Vector, Form };

    Kind kind = Kind::Vector;
    Term lhs;                         // Vector
    Term rhs;                         // Vector
    std::string form;                 // Form
    std::vector<FormSummand> summands; // Form: sum of summands is zero
    std::vector<char> variables;      // sorted x < y < z < w
    std::string text;
};

/// name := sum of coef * part, computed from the bundle before checking and
/// taking precedence over any product of that name already present.
struct DerivedProduct {
    std::string name;
    std::vector<std::pair<Rational, std::string>> parts;
};

struct IdentitySystem {
    std::string name;
    std::vector<Equation> equations;
    std::vector<std::string> required_products;
    std::vector<std::string> required_forms;
    std::vector<std::string> required_maps;
    std::vector<DerivedProduct> derived;
    /// Equations use the placeholder product "mul" and are instantiated once
    /// for every product of the bundle (or a chosen subset).
    bool per_product = false;
};

/// Parses "lhs = rhs". Identifiers applied to two arguments are products,
/// to one argument maps; a two-argument identifier listed in form_names
/// turns the whole equation into a scalar identity. Coefficients are
/// written "2*t" or "1/2*t"; "0" is the zero vector.
Equation parse_equation(std::string_view text, const std::vector<std::string>& form_names = {});
Term parse_term(std::string_view text);

using Assignment = std::map<char, Vector>;

Vector evaluate_term(const Term& term, const AlgebraBundle& bundle, const Assignment& values);

struct Defect {
    std::optional<Vector> vector;
    std::optional<Rational> scalar;

    bool is_zero() const;
    nlohmann::json to_json() const;
};

/// lhs - rhs for a vector identity, or the scalar sum for a form identity.
Defect equation_defect(const Equation& eq, const AlgebraBundle& bundle, const Assignment& values);

struct Counterexample {
    std::size_t equation = 0;
    std::string text;
    std::vector<char> variables;
    std::vector<std::size_t> basis;
    Defect defect;
    std::optional<std::array<long, 3>> degrees;
};

struct CheckReport {
    bool holds = true;
    std::optional<Counterexample> counterexample;

    nlohmann::json to_json() const;
};

/// Adds the system's derived products to a copy of the bundle.
AlgebraBundle with_derived(const IdentitySystem& sys, const AlgebraBundle& bundle);

/// Copy of sys with names substituted (products, forms and maps share one
/// namespace of identifiers).
IdentitySystem rename_system(const IdentitySystem& sys, const std::map<std::string, std::string>& names);

/// Expands a per-product system over the given products (all products of
/// the bundle when empty). Other systems are returned unchanged.
IdentitySystem instantiate(const IdentitySystem& sys, const AlgebraBundle& bundle,
                           const std::vector<std::string>& products = {});

/// Exhausts basis tuples for every equation. The first failure in
/// (equation, lexicographic tuple) order is reported.
CheckReport check_system(const IdentitySystem& sys, const AlgebraBundle& bundle);
CheckReport check_system(std::string_view registry_name, const AlgebraBundle& bundle);

/// Every defect coordinate over every equation and basis tuple, in check
/// order. Linear in any structure the identities are linear in.
std::vector<Rational> defect_coordinates(const IdentitySystem& sys, const AlgebraBundle& bundle);
bool holds(std::string_view registry_name, const AlgebraBundle& bundle);

const IdentitySystem& registry(std::string_view name);
std::vector<std::string> registry_names();

} // namespace nalg
