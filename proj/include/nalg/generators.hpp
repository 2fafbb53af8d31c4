#pragma once

#include "nalg/algebra.hpp"
#include "nalg/random.hpp"

#include <string>
#include <vector>

namespace nalg {

/// A generated structure together with a short description of how it was
/// built, used in suite reports.
template <typename T>
struct Sample {
    std::string source;
    T value;
};

/// Commutative associative algebras of dimension 1 to 3 from a fixed list,
/// transported by a random basis change.
MultTable random_commutative_associative(Rng& rng, std::size_t max_dim = 3);

/// x * y = f(x) y for a random nonzero functional f, tensored with a
/// commutative associative algebra when room allows.
MultTable random_perm(Rng& rng, std::size_t max_dim = 3);

/// Associative algebras that are generally not commutative (upper
/// triangular matrices, f-perm, tensor products with commutative ones).
MultTable random_associative(Rng& rng, std::size_t max_dim = 3);

/// Random nonzero derivation of every listed product (zero when none exists).
Matrix random_derivation(Rng& rng, const AlgebraBundle& b);

/// x ast y = x . D(y) for a commutative associative algebra with derivation D.
MultTable random_novikov(Rng& rng, std::size_t max_dim = 3);

/// Novikov dialgebras (vdash, dashv) from Novikov algebras and from
/// averaging operators on them.
SplitPair random_novikov_dialgebra(Rng& rng, std::size_t max_dim = 3);

/// Leibniz algebras from perm algebras with derivations, sub-adjacent
/// products of Novikov dialgebras, semidirect products and fixtures.
MultTable random_leibniz(Rng& rng, std::size_t max_dim = 3);

/// Leibniz algebra with a nondegenerate skew-symmetric 2-cocycle. Built as
/// a semidirect product on A + A* with the canonical form, or found in the
/// cocycle space of an even-dimensional Leibniz algebra.
AlgebraBundle random_cocycle_instance(Rng& rng, std::size_t max_dim = 4);

/// Anti-pre-Leibniz algebras: minus2 images of Novikov dialgebras, splits
/// of 2-cocycles, semidirect splits with the adjoint and its dual.
SplitPair random_anti_pre_leibniz(Rng& rng, std::size_t max_dim = 3);

/// Pre-Leibniz algebras: preimages of Novikov dialgebras and associative
/// algebras with rhd = product, lhd = -flipped product.
SplitPair random_pre_leibniz(Rng& rng, std::size_t max_dim = 3);

/// GD dialgebras (circ, vdash, dashv): from Novikov dialgebras and by the
/// averaging construction on GD algebras.
AlgebraBundle random_gd_dialgebra(Rng& rng, std::size_t max_dim = 3);

} // namespace nalg
