#ifndef DLN_COVER_HPP
#define DLN_COVER_HPP

#include <string>
#include <utility>
#include <vector>

#include "dln/coloring.hpp"

namespace dln {

// Per-arc configuration diagrams for the p-fold dihedral cover.
//
// Arc i carries q arrows on the vertices 0..p-1 of a regular p-gon.  Arrow j
// runs tail[i][j] -> head[i][j]; its endpoints are swapped by the reflection
// through vertex c(i), and the q arrows cover every vertex except c(i).
// Arrow 0 is the degenerate arrow sitting at c(i) itself.  The diagram at
// arc i+1 is the diagram at arc i reflected through vertex c(o(i)).
struct ConfigurationDiagram {
    int p = 3;
    int q = 1;
    int n = 0;
    std::vector<std::vector<int>> head;  // head[i][j], j = 0..q
    std::vector<std::vector<int>> tail;  // tail[i][j]
};

// An initial arrow set for arc 0: (tail, head) per j = 0..q.
using ArrowSet = std::vector<std::pair<int, int>>;

// The frozen arc-0 choice: arrow j runs c(0)-j -> c(0)+j (mod p), i.e.
// arrows are labeled by p-gon distance from the colored vertex.  This is the
// labeling the published linking matrices use.
ArrowSet initial_configuration(const Coloring& col);

// Propagates the arc-0 arrows through all n crossings and checks the
// monodromy closes up exactly (ClosureFailure means a bug, not bad input:
// n even + Fox condition guarantee closure).
ConfigurationDiagram build_configurations(const OrientedDiagram& d, const Coloring& col);
ConfigurationDiagram build_configurations(const OrientedDiagram& d, const Coloring& col,
                                          const ArrowSet& arc0);

// a(i,j): the arrow of arc o(i) whose endpoints contain head[i][j];
// b(i,j): same for tail[i][j].  Total by the arrow-partition invariant.
std::pair<int, int> ab(const ConfigurationDiagram& cfg, const OrientedDiagram& d,
                       int i, int j);

// eps_a(i,j): 0 when a(i,j)=0, +1 when head[i][j] lands on the head of
// arrow a(i,j), -1 on its tail.  eps_b mirrors this for tails (+1 tail on
// tail, -1 tail on head).
std::pair<int, int> eps(const ConfigurationDiagram& cfg, const OrientedDiagram& d,
                        int i, int j);

// The constant contributions C_a, C_b of the one extra 2-cell incident to
// r_i^j - l_i^j (the B-sheet when k=0, the L-sheet of lift k otherwise).
std::pair<int, int> cconst(const ConfigurationDiagram& cfg, const OrientedDiagram& d,
                           int i, int j, int k);

// All six coefficient functions evaluated once per (diagram, coloring); the
// chain solver and linking sums read plain numbers from here.
struct CoefficientTables {
    int n = 0;
    int q = 1;
    std::vector<int> over;
    std::vector<int> sign;
    std::vector<std::vector<int>> a, b, eps_a, eps_b;  // [i][j], j = 0..q

    int c_a(int i, int j, int k) const;
    int c_b(int i, int j, int k) const;
};

CoefficientTables coefficient_tables(const ConfigurationDiagram& cfg,
                                     const OrientedDiagram& d);

// Debug dump, one arc per line: "i: 1:(t->h) 2:(t->h) ...".
std::string dump(const ConfigurationDiagram& cfg);

}  // namespace dln

#endif
