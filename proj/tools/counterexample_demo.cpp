// Compares Delta(T) of the path with the best tree found by exhaustive search.
#include <iostream>

#include "treeinv/constructions.hpp"
#include "treeinv/invariants.hpp"
#include "treeinv/verify.hpp"

int main() {
    using namespace treeinv;
    for (vertex_id n = 4; n <= 16; ++n) {
        const auto best = verify::search("Delta", n, std::nullopt, verify::Direction::max);
        const auto on_path = summarize(path(n)).delta_sum;
        std::cout << "n=" << n << "  Delta(P_n)=" << on_path << "  max Delta=" << *best.optimum
                  << (*best.optimum > on_path ? "  (path is not extremal)" : "") << '\n';
    }
    const auto spider = starlike({6, 6, 1});
    std::cout << "Delta(S(6,6,1)) = " << summarize(spider).delta_sum << '\n';
}
