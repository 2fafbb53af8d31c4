// Seeded search for a two-dimensional GD dialgebra with nonzero circ and a nonzero
// dialgebra part that carries a derivation whose derivation product differs from circ. Prints the bundle
// (with the derivation stored as map "P") as JSON.
//
//   find_fixture [seed] [max-attempts]

#include "nalg/constructions.hpp"
#include "nalg/identity.hpp"
#include "nalg/random.hpp"
#include "nalg/io.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    using namespace nalg;
    const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 1;
    const long attempts = argc > 2 ? std::stol(argv[2]) : 10000;
    Rng rng(seed);
    for (long attempt = 0; attempt < attempts; ++attempt) {
        // two to four structure constants in {-1, 1} spread over the three tables
        AlgebraBundle gd(2);
        MultTable tables[3] = {MultTable(2), MultTable(2), MultTable(2)};
        const long count = rng.uniform(2, 4);
        for (long c = 0; c < count; ++c) {
            const auto slot = static_cast<std::size_t>(rng.uniform(0, 23));
            tables[slot / 8](slot % 8 / 4, slot % 4 / 2, slot % 2) = rng.chance(1, 2) ? 1 : -1;
        }
        gd.add("circ", tables[0]).add("vdash", tables[1]).add("dashv", tables[2]);
        if (tables[0].is_zero() || (tables[1].is_zero() && tables[2].is_zero()) || !holds("gd-dialgebra", gd))
            continue;
        const auto basis = derivation_basis(gd, {"circ", "vdash", "dashv"});
        if (basis.empty())
            continue;
        const Matrix P = random_combination(rng, basis);
        const MultTable dot = derivation_product(gd, P);
        if (dot == gd.product("circ"))
            continue;
        gd.add("P", LinearEndo(P)).add("dot", dot);
        std::cerr << "found after " << attempt + 1 << " attempts\n";
        std::cout << bundle_to_json(gd).dump(2) << "\n";
        return EXIT_SUCCESS;
    }
    std::cerr << "nothing found\n";
    return EXIT_FAILURE;
}
