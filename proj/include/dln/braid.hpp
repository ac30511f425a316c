#ifndef DLN_BRAID_HPP
#define DLN_BRAID_HPP

#include <string>
#include <vector>

#include "dln/errors.hpp"

namespace dln {

// A braid word on `strands` strands.  Letter g > 0 is the generator sigma_g,
// g < 0 its inverse.  Only words whose closure is a knot are accepted.
struct BraidWord {
    std::vector<int> letters;
    int strands = 2;
};

// A knot diagram as combinatorial lists: arcs are the maximal
// over-segments, numbered 0..n-1 in traversal order; crossing i sits at the
// head of arc i (where arc i goes under), arc i+1 (mod n) leaves it;
// over[i] is the arc passing over crossing i and sign[i] its local writhe.
struct OrientedDiagram {
    int n = 0;
    std::vector<int> over;
    std::vector<int> sign;
};

// Whitespace- or comma-separated signed integers, e.g. "1 -2 1 -2".
// Rejects zero letters and multi-component closures.
BraidWord parse_braid(const std::string& text);

// True iff the braid's underlying permutation is one full cycle.
bool closes_to_knot(const BraidWord& w);

// Markov-stabilizes once (append sigma_strands on a new strand) when the
// letter count is odd; a positive kink on the closure, knot type unchanged.
BraidWord ensure_even(const BraidWord& w);

// Traces the closure into arc/crossing lists.  Traversal starts at the top
// of strand 1 and runs in the braid direction; sigma_g closes to a positive
// crossing (sign +1), its inverse to a negative one.
OrientedDiagram braid_closure(const BraidWord& w);

// Accepts the raw overstrand/sign lists directly.
OrientedDiagram diagram_from_lists(const std::vector<int>& over,
                                   const std::vector<int>& sign);

// Same diagram with every crossing sign negated.
OrientedDiagram mirror(const OrientedDiagram& d);

}  // namespace dln

#endif
