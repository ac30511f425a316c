#include "dln/chains.hpp"

#include <sstream>

namespace dln {

namespace {
inline int column_of(int n, int i, int j) { return (j - 1) * n + (i % n); }
}

LinearSystem assemble(const CoefficientTables& t, int k) {
    const int n = t.n, q = t.q, N = n * q;
    LinearSystem sys;
    sys.n = n;
    sys.q = q;
    sys.k = k;
    sys.coeff.assign(N, std::vector<int>(N, 0));
    sys.rhs.assign(N, 0);
    int r = 0;
    for (int j = 1; j <= q; ++j) {
        for (int i = 0; i < n; ++i, ++r) {
            auto& row = sys.coeff[r];
            row[column_of(n, i, j)] += 1;
            row[column_of(n, i + 1, j)] -= 1;
            if (t.a[i][j] != 0) row[column_of(n, t.over[i], t.a[i][j])] -= t.eps_a[i][j];
            if (t.b[i][j] != 0) row[column_of(n, t.over[i], t.b[i][j])] -= t.eps_b[i][j];
            sys.rhs[r] = -(t.c_a(i, j, k) + t.c_b(i, j, k));
        }
    }
    return sys;
}

ChainSolution solve(const LinearSystem& sys) {
    const int N = static_cast<int>(sys.coeff.size());
    // augmented exact matrix
    std::vector<std::vector<mpq_class>> a(N, std::vector<mpq_class>(N + 1));
    for (int r = 0; r < N; ++r) {
        for (int c = 0; c < N; ++c) a[r][c] = sys.coeff[r][c];
        a[r][N] = sys.rhs[r];
    }
    std::vector<int> piv_cols;
    int rank = 0;
    for (int c = 0; c < N && rank < N; ++c) {
        int sel = -1;
        for (int r = rank; r < N; ++r)
            if (a[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel == -1) continue;
        std::swap(a[rank], a[sel]);
        mpq_class inv = 1 / a[rank][c];
        for (auto& x : a[rank]) x *= inv;
        for (int r = 0; r < N; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            mpq_class f = a[r][c];
            for (int j = c; j <= N; ++j) a[r][j] -= f * a[rank][j];
        }
        piv_cols.push_back(c);
        ++rank;
    }
    ChainSolution sol;
    sol.k = sys.k;
    for (int r = rank; r < N; ++r)
        if (a[r][N] != 0) {
            sol.status = ChainStatus::NotNullHomologous;
            return sol;
        }
    sol.status = ChainStatus::Solvable;
    sol.x.assign(N, mpq_class(0));
    for (int r = 0; r < rank; ++r) sol.x[piv_cols[r]] = a[r][N];
    std::vector<char> is_pivot(N, 0);
    for (int c : piv_cols) is_pivot[c] = 1;
    for (int fc = 0; fc < N; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<mpq_class> v(N, mpq_class(0));
        v[fc] = 1;
        for (int r = 0; r < rank; ++r) v[piv_cols[r]] = -a[r][fc];
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

std::vector<mpq_class> residual(const LinearSystem& sys, const std::vector<mpq_class>& x) {
    const size_t N = sys.coeff.size();
    if (x.size() != N) throw DimensionMismatch();
    std::vector<mpq_class> out(N, mpq_class(0));
    for (size_t r = 0; r < N; ++r) {
        mpq_class acc(-sys.rhs[r]);
        for (size_t c = 0; c < N; ++c)
            if (sys.coeff[r][c] != 0) acc += sys.coeff[r][c] * x[c];
        out[r] = acc;
    }
    return out;
}

std::string dump_augmented(const LinearSystem& sys) {
    std::ostringstream out;
    for (size_t r = 0; r < sys.coeff.size(); ++r) {
        for (int c : sys.coeff[r]) out << c << " ";
        out << "| " << sys.rhs[r] << "\n";
    }
    return out.str();
}

}  // namespace dln
