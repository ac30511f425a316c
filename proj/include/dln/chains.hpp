#ifndef DLN_CHAINS_HPP
#define DLN_CHAINS_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dln/cover.hpp"

namespace dln {

// The chain system for branch curve K^k: one equation per (i, j), i a
// crossing, j = 1..q a lift index,
//
//   x_i^j - x_{i+1}^j - eps_a(i,j) x_{o(i)}^{a(i,j)} - eps_b(i,j) x_{o(i)}^{b(i,j)}
//     + C_a(i,j,k) + C_b(i,j,k) = 0,
//
// terms with lift index 0 omitted.  Solvability is equivalent to K^k being
// rationally null-homologous; a solution encodes the bounding 2-chain.
// Unknown (i, j) lives in column (j-1)*n + i; constants are moved to the
// right-hand side.
struct LinearSystem {
    int n = 0;
    int q = 1;
    int k = 0;
    std::vector<std::vector<int>> coeff;  // nq x nq, entries in -2..2
    std::vector<int> rhs;                 // nq
};

enum class ChainStatus { Solvable, NotNullHomologous };

struct ChainSolution {
    int k = 0;
    ChainStatus status = ChainStatus::NotNullHomologous;
    std::vector<mpq_class> x;                      // present iff Solvable
    std::vector<std::vector<mpq_class>> nullspace; // basis of the homogeneous system
};

LinearSystem assemble(const CoefficientTables& t, int k);

// Exact rational elimination.  The particular solution sets every free
// variable to 0; inconsistency is reported as NotNullHomologous, not an
// error.
ChainSolution solve(const LinearSystem& sys);

// Row values of sys at x (all zero iff x solves it).
std::vector<mpq_class> residual(const LinearSystem& sys, const std::vector<mpq_class>& x);

// Plain-text augmented matrix, coefficient columns then the constant column.
std::string dump_augmented(const LinearSystem& sys);

}  // namespace dln

#endif
