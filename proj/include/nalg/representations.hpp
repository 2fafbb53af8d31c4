#pragma once

#include "nalg/algebra.hpp"
#include "nalg/identity.hpp"

namespace nalg {

/// l(e_t) = left multiplication, r(e_t) = right multiplication.
RepBundle adjoint_rep(const MultTable& t);

/// (l*, -l* - r*).
RepBundle dual_leibniz_rep(const RepBundle& rep);

/// Quadruple (L_succ, R_succ, L_prec, R_prec).
RepBundle apl_adjoint_rep(const SplitPair& s);

/// With l_circ = l_succ + l_prec and r_circ = r_succ + r_prec:
/// (-l_circ*, -l_prec* - r_succ*, l_prec*, l_circ* + r_circ*).
RepBundle dual_apl_rep(const RepBundle& rep);

/// Product on A + V: (x+u)(y+v) = xy + l(x)v + r(y)u. Basis of A first.
MultTable semidirect_leibniz(const MultTable& circ, const RepBundle& rep);

/// Same block shape for both products of an anti-pre-Leibniz split.
SplitPair semidirect_apl(const SplitPair& s, const RepBundle& rep);

/// Leibniz check of the semidirect product.
CheckReport check_leibniz_rep(const MultTable& circ, const RepBundle& rep);

/// Anti-pre-Leibniz check of the semidirect split.
CheckReport check_apl_rep(const SplitPair& s, const RepBundle& rep);

/// phi * f1(e_t) == f2(e_t) * phi for every family and basis index.
/// phi is module_dim2 x module_dim1 and must be invertible.
bool check_rep_equivalence(const RepBundle& rep1, const RepBundle& rep2, const Matrix& phi);

/// Builds a representation from per-basis matrices computed by f(t).
RepBundle make_rep(std::size_t algebra_dim, std::size_t module_dim,
                   const std::vector<std::pair<std::string, std::function<Matrix(std::size_t)>>>& families);

} // namespace nalg
