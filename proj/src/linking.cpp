#include "dln/linking.hpp"

#include <algorithm>

namespace dln {

mpq_class int_term(const CoefficientTables& t, int i, int j, int k,
                   const std::vector<mpq_class>& x) {
    mpq_class term(0);
    const int a = t.a[i][j];
    if (a != 0)  // treat the x-term as 0 when a(i,j) = 0
        term = t.eps_a[i][j] * x[(a - 1) * t.n + t.over[i]];
    term -= t.c_a(i, j, k);
    return term;
}

mpq_class int_term(const CoefficientTables& t, int i, int j, int k,
                   const ChainSolution& sol) {
    if (sol.status != ChainStatus::Solvable) throw NotSolvable();
    return int_term(t, i, j, k, sol.x);
}

mpq_class lk_sum(const CoefficientTables& t, int j, int k,
                 const std::vector<mpq_class>& xk) {
    mpq_class s(0);
    for (int i = 0; i < t.n; ++i) s += int_term(t, i, j, k, xk);
    return s;
}

ExtendedRational lk_pair(const CoefficientTables& t, int j, int k,
                         const std::vector<ChainSolution>& solutions) {
    const ChainSolution& sj = solutions.at(j);
    const ChainSolution& sk = solutions.at(k);
    if (sj.status != ChainStatus::Solvable || sk.status != ChainStatus::Solvable)
        return ExtendedRational::infinity();
    mpq_class v = lk_sum(t, j, k, sk.x);
    if (j != k) {
        // the algorithm double-checks itself: both summation orders must agree
        mpq_class w = lk_sum(t, k, j, sj.x);
        if (v != w) throw SymmetryViolation();
    }
    return ExtendedRational(v);
}

static DLNResult dln_from_tables(const CoefficientTables& t, int p, int q) {
    DLNResult res;
    res.p = p;
    res.q = q;
    std::vector<ChainSolution> sols;
    sols.reserve(q + 1);
    for (int k = 0; k <= q; ++k) sols.push_back(solve(assemble(t, k)));
    res.matrix.assign(q + 1, std::vector<ExtendedRational>(q + 1));
    for (int j = 0; j <= q; ++j)
        for (int k = j; k <= q; ++k) {
            ExtendedRational v = lk_pair(t, j, k, sols);
            res.matrix[j][k] = v;
            res.matrix[k][j] = v;
            if (j != k) res.multiset.push_back(v);
        }
    std::sort(res.multiset.begin(), res.multiset.end());
    return res;
}

DLNResult dln(const OrientedDiagram& d, const Coloring& col) {
    auto cfg = build_configurations(d, col);
    return dln_from_tables(coefficient_tables(cfg, d), col.p, col.q);
}

DLNResult dln(const OrientedDiagram& d, const Coloring& col, const ArrowSet& arc0) {
    auto cfg = build_configurations(d, col, arc0);
    return dln_from_tables(coefficient_tables(cfg, d), col.p, col.q);
}

}  // namespace dln
