#pragma once

#include "nalg/algebra.hpp"
#include "nalg/identity.hpp"
#include "nalg/representations.hpp"

#include <vector>

namespace nalg {

/// Most constructions validate their inputs with the identity checker and
/// throw a specific ErrorKind when a precondition fails. Passing
/// Validate::Skip builds the output anyway.
enum class Validate { Check, Skip };

struct LeviCivita {
    MultTable lozenge;
    MultTable blacklozenge;
};

/// Solves 2w(x<>y, z) and 2w(x<#>y, z) from the defining sums for every
/// basis pair. Needs w skew and nondegenerate.
LeviCivita levi_civita(const MultTable& circ, const BilinearForm& w);

/// (succ, prec) with w(x succ y, z) = w(y, x.z) and
/// w(x prec y, z) = -w(x, y.z + z.y). Needs w to be a skew nondegenerate
/// 2-cocycle on circ.
SplitPair levi_civita_from_cocycle(const MultTable& circ, const BilinearForm& w, Validate v = Validate::Check);

/// Matrix of w^natural, the map u -> w(u, -) in the dual basis: gram^T.
Matrix form_flat(const BilinearForm& w);

/// (Tu).(Tv) = -T(l(Tu)v + r(Tv)u) on all basis pairs of the module.
/// T is n x m with n = algebra dimension and m = module dimension.
bool check_anti_O(const Matrix& T, const MultTable& circ, const RepBundle& rep);
/// l((Tu).(Tv))w + r((Tu).(Tw))v - r((Tv).(Tw))u = 0 on basis triples.
bool check_strong_anti_O(const Matrix& T, const MultTable& circ, const RepBundle& rep);

/// u succ v = -l(Tu)v, u prec v = -r(Tv)u, on the module.
SplitPair induced_split(const Matrix& T, const MultTable& circ, const RepBundle& rep, Validate v = Validate::Check);

/// x succ y = -T(l(x)T^{-1}y), x prec y = -T(r(y)T^{-1}x), on the algebra.
SplitPair compatible_split_from_invertible_anti_O(const Matrix& T, const MultTable& circ, const RepBundle& rep,
                                                  Validate v = Validate::Check);

/// Coadjoint representation (L*, -L* - R*) of circ.
RepBundle coadjoint_rep(const MultTable& circ);

enum class OperatorMode { Averaging, Derivation };

/// x.y = P(x)*y - x*P(y).
MultTable perm_to_leibniz(const MultTable& star, const Matrix& P, OperatorMode mode, Validate v = Validate::Check);

/// x succ y = x vdash y + 2 y dashv x, x prec y = -y dashv x - 2 x vdash y.
SplitPair minus2_transform(const SplitPair& nd);
/// x vdash y = x succ y + 2 x prec y, x dashv y = -y prec x - 2 y succ x.
SplitPair plus2_transform(const SplitPair& apl);

/// vdash = rhd, dashv = -flip(lhd).
SplitPair transformed_from_pre(const SplitPair& pre);
/// rhd = vdash, lhd = -flip(dashv).
SplitPair pre_from_transformed(const SplitPair& transformed);

/// Two products on A + A*, both Leibniz when the input has the required
/// structure. For anti-pre-Leibniz input they are the semidirect products
/// with (-L_succ*, L_succ* + R_prec*) and with the coadjoint of circ; for
/// pre-Leibniz input with (L_rhd*, -L_rhd* - R_lhd*) and the coadjoint of
/// rhd + lhd.
/// (-L_succ*, L_succ* + R_prec*) for a split (succ, prec).
RepBundle apl_twisted_dual_rep(const SplitPair& s);
/// (L_rhd*, -L_rhd* - R_lhd*) for a split (rhd, lhd).
RepBundle pre_twisted_dual_rep(const SplitPair& s);

struct DoubleStructures {
    MultTable first;
    MultTable second;
};
DoubleStructures double_structures_apl(const SplitPair& apl, Validate v = Validate::Check);
DoubleStructures double_structures_pre(const SplitPair& pre, Validate v = Validate::Check);

/// [[0, I], [-I, 0]] on dim 2n.
BilinearForm omega_p(std::size_t n);

/// circ(x,y) = x vdash y - y dashv x, plus the pair itself.
AlgebraBundle gd_from_novikov_di(const SplitPair& nd, Validate v = Validate::Check);

/// circ(x,y) = [P x, y], x vdash y = P(x) ast y, x dashv y = x ast P(y).
AlgebraBundle gd_from_averaging(const MultTable& bracket, const MultTable& ast, const Matrix& P,
                                Validate v = Validate::Check);

/// x.y = circ(x,y) + P(x) vdash y - P(y) dashv x.
MultTable derivation_product(const AlgebraBundle& gd, const Matrix& P, Validate v = Validate::Check);

/// Basis of the skew forms satisfying the 2-cocycle identity for circ.
std::vector<Matrix> skew_cocycle_basis(const MultTable& circ);

/// Basis of the linear maps that are derivations of every listed product.
std::vector<Matrix> derivation_basis(const AlgebraBundle& bundle, const std::vector<std::string>& products = {});

} // namespace nalg
