#pragma once

#include "nalg/algebra.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace nalg {

/// Seeded source. Draws use plain modulo reduction of mt19937_64 output so
/// sequences are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }
    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    /// True with probability num/den.
    bool chance(unsigned num, unsigned den);
    template <typename T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))]; }

private:
    std::mt19937_64 gen_;
};

/// Entries from {lo..hi}, each nonzero with probability density_percent/100.
MultTable random_table(Rng& rng, std::size_t n, unsigned density_percent = 50, long lo = -2, long hi = 2);
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo = -2, long hi = 2);

/// Product of random unit lower and upper triangular matrices times a
/// diagonal of +-1: always invertible.
Matrix random_invertible(Rng& rng, std::size_t n);

/// Random combination with small integer coefficients, never all zero
/// unless the list is empty.
Matrix random_combination(Rng& rng, const std::vector<Matrix>& basis);

/// Structure transported along g: x *' y = g^{-1}((g x) * (g y)).
MultTable transport(const MultTable& t, const Matrix& g);
SplitPair transport(const SplitPair& s, const Matrix& g);
/// All products, forms (g^T G g) and maps (g^{-1} P g) of the bundle.
AlgebraBundle transport(const AlgebraBundle& b, const Matrix& g);

/// Changes one structure constant of the table by a nonzero amount.
MultTable mutate(Rng& rng, const MultTable& t);

} // namespace nalg
