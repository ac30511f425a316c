// Shared helpers for randomized tests: braid/coloring instance generation.
#ifndef DLN_TESTS_SUPPORT_HPP
#define DLN_TESTS_SUPPORT_HPP

#include <optional>
#include <random>

#include "dln/linking.hpp"

namespace dln::testsupport {

inline BraidWord random_knot_braid(std::mt19937& rng, int max_letters = 11) {
    for (;;) {
        int strands = std::uniform_int_distribution<int>(2, 4)(rng);
        int len = std::uniform_int_distribution<int>(4, max_letters)(rng);
        BraidWord w;
        w.strands = strands;
        bool all_gens[4] = {false, false, false, false};
        for (int i = 0; i < len; ++i) {
            int g = std::uniform_int_distribution<int>(1, strands - 1)(rng);
            all_gens[g] = true;
            w.letters.push_back(rng() % 2 ? g : -g);
        }
        bool ok = true;
        for (int g = 1; g < strands; ++g) ok = ok && all_gens[g];
        if (!ok || !closes_to_knot(w)) continue;
        return w;
    }
}

struct ColoredInstance {
    OrientedDiagram diagram;
    Coloring coloring;
    int p;
};

// A random (diagram, p, coloring) with the diagram a braid closure of at
// most `max_letters`+1 crossings and p in {3,5,7}.
inline ColoredInstance random_colored_instance(std::mt19937& rng, int max_letters = 11) {
    for (;;) {
        BraidWord w = random_knot_braid(rng, max_letters);
        OrientedDiagram d = braid_closure(ensure_even(w));
        int ps[3] = {3, 5, 7};
        std::shuffle(ps, ps + 3, rng);
        for (int p : ps) {
            auto cols = fox_colorings(d, p);
            if (cols.empty()) continue;
            size_t pick = std::uniform_int_distribution<size_t>(0, cols.size() - 1)(rng);
            return ColoredInstance{d, cols[pick], p};
        }
    }
}

}  // namespace dln::testsupport

#endif
