#ifndef DLN_LINKING_HPP
#define DLN_LINKING_HPP

#include <vector>

#include "dln/chains.hpp"
#include "dln/rational.hpp"

namespace dln {

// The (q+1)x(q+1) matrix of pairwise linking numbers of the branch curves
// K^0..K^q, and the invariant multiset of its q(q+1)/2 off-diagonal values
// (one per unordered pair).  Diagonal entries are framing-dependent
// self-linking numbers; they are reported but never enter the multiset.
struct DLNResult {
    int p = 3;
    int q = 1;
    std::vector<std::vector<ExtendedRational>> matrix;
    std::vector<ExtendedRational> multiset;  // sorted ascending, inf last
};

// Int(i,j,k) = eps_a(i,j) * x_{o(i)}^{a(i,j)} - C_a(i,j,k), the x-term taken
// as 0 when a(i,j) = 0.  x is a solution vector of the k-system in the
// column layout of LinearSystem.
mpq_class int_term(const CoefficientTables& t, int i, int j, int k,
                   const std::vector<mpq_class>& x);
mpq_class int_term(const CoefficientTables& t, int i, int j, int k,
                   const ChainSolution& sol);

// Sum of Int(i,j,k) over all crossings.
mpq_class lk_sum(const CoefficientTables& t, int j, int k,
                 const std::vector<mpq_class>& xk);

// lk(K^j, K^k): infinity unless both components' systems are solvable.  For
// finite off-diagonal values both summation orders are computed and must
// agree exactly.
ExtendedRational lk_pair(const CoefficientTables& t, int j, int k,
                         const std::vector<ChainSolution>& solutions);

DLNResult dln(const OrientedDiagram& d, const Coloring& col);
DLNResult dln(const OrientedDiagram& d, const Coloring& col, const ArrowSet& arc0);

}  // namespace dln

#endif
