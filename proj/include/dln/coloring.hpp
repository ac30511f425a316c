#ifndef DLN_COLORING_HPP
#define DLN_COLORING_HPP

#include <vector>

#include "dln/braid.hpp"

namespace dln {

// A Fox p-coloring: colors[i] is the Z_p residue on arc i, and at every
// crossing c(i) + c(i+1) = 2 c(o(i)) mod p.  q = (p-1)/2 is the number of
// index-2 branch curves of the associated dihedral cover.
struct Coloring {
    int p = 3;
    int q = 1;
    std::vector<int> colors;
};

// Image of vertex x under the reflection of the p-gon through vertex m.
int reflect(int x, int m, int p);

// True iff the Fox condition holds at every crossing.
bool satisfies_fox(const OrientedDiagram& d, const Coloring& c);

// All solutions of the Fox equations mod p, constants included, nothing
// filtered.  Elimination with unit pivots plus enumeration of the leftover
// free residues, so composite odd p works too.
std::vector<Coloring> all_fox_colorings(const OrientedDiagram& d, int p);

// The colorings that actually present the knot group onto D_p: at least two
// distinct colors and gcd(p, gcd_i(c_i - c_0)) = 1.
std::vector<Coloring> fox_colorings(const OrientedDiagram& d, int p);

// Partitions colorings by the affine action c -> a*c + b (a a unit mod p)
// and returns the lexicographically smallest member of each orbit, sorted.
std::vector<Coloring> equivalence_classes(const std::vector<Coloring>& cs);

bool is_colorable(const OrientedDiagram& d, int p);

std::vector<int> parse_coloring(const std::string& text);

}  // namespace dln

#endif
