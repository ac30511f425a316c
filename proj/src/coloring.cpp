#include "dln/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dln {

namespace {

int mod(long long x, int p) {
    int r = static_cast<int>(x % p);
    return r < 0 ? r + p : r;
}

// y with x*y = 1 mod p, or -1 when x is not a unit.
int unit_inverse(int x, int p) {
    int t = 0, nt = 1, r = p, nr = mod(x, p);
    while (nr != 0) {
        int qu = r / nr;
        int tmp = t - qu * nt;
        t = nt;
        nt = tmp;
        tmp = r - qu * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) return -1;
    return mod(t, p);
}

}  // namespace

int reflect(int x, int m, int p) { return mod(2LL * m - x, p); }

bool satisfies_fox(const OrientedDiagram& d, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != d.n) return false;
    for (int i = 0; i < d.n; ++i) {
        int a = c.colors[i];
        int b = c.colors[(i + 1) % d.n];
        int m = c.colors[d.over[i]];
        if (mod(a + b - 2LL * m, c.p) != 0) return false;
    }
    return true;
}

std::vector<Coloring> all_fox_colorings(const OrientedDiagram& d, int p) {
    if (p < 3 || p % 2 == 0) throw UnsupportedP(p);
    const int n = d.n;
    // rows of the Fox system c_i + c_{i+1} - 2 c_{o(i)} = 0 mod p
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        m[i][i] = mod(m[i][i] + 1, p);
        m[i][(i + 1) % n] = mod(m[i][(i + 1) % n] + 1, p);
        m[i][d.over[i]] = mod(m[i][d.over[i]] - 2, p);
    }
    // elimination restricted to unit pivots; whatever remains is enumerated
    std::vector<int> piv_cols;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int r = rank; r < n; ++r)
            if (unit_inverse(m[r][col], p) != -1) {
                sel = r;
                break;
            }
        if (sel == -1) continue;
        std::swap(m[rank], m[sel]);
        int inv = unit_inverse(m[rank][col], p);
        for (int j = 0; j < n; ++j) m[rank][j] = mod(1LL * m[rank][j] * inv, p);
        for (int r = 0; r < n; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            int f = m[r][col];
            for (int j = 0; j < n; ++j)
                m[r][j] = mod(m[r][j] - 1LL * f * m[rank][j], p);
        }
        piv_cols.push_back(col);
        ++rank;
    }
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (std::find(piv_cols.begin(), piv_cols.end(), c) == piv_cols.end())
            free_cols.push_back(c);

    std::vector<Coloring> out;
    std::vector<int> colors(n, 0);
    const int f = static_cast<int>(free_cols.size());
    // odometer over the free residues
    std::vector<int> v(f, 0);
    while (true) {
        for (int t = 0; t < f; ++t) colors[free_cols[t]] = v[t];
        bool ok = true;
        for (int r = rank - 1; r >= 0; --r) {
            long long s = 0;
            for (int c : free_cols) s += 1LL * m[r][c] * colors[c];
            // pivot columns right of this one are already set
            for (int r2 = r + 1; r2 < rank; ++r2)
                s += 1LL * m[r][piv_cols[r2]] * colors[piv_cols[r2]];
            colors[piv_cols[r]] = mod(-s, p);
        }
        // re-check everything: with composite p the eliminated form can keep
        // non-unit constraints alive
        Coloring cand{p, (p - 1) / 2, colors};
        ok = satisfies_fox(d, cand);
        if (ok) out.push_back(cand);
        int t = 0;
        while (t < f && ++v[t] == p) v[t++] = 0;
        if (t == f) break;
    }
    std::sort(out.begin(), out.end(),
              [](const Coloring& x, const Coloring& y) { return x.colors < y.colors; });
    return out;
}

std::vector<Coloring> fox_colorings(const OrientedDiagram& d, int p) {
    std::vector<Coloring> out;
    for (Coloring& c : all_fox_colorings(d, p)) {
        bool nontrivial = false;
        int g = 0;
        for (int x : c.colors) {
            if (x != c.colors[0]) nontrivial = true;
            g = std::gcd(g, x - c.colors[0]);
        }
        if (!nontrivial) continue;
        if (std::gcd(p, g) != 1) continue;  // lands in a proper dihedral subgroup
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Coloring> equivalence_classes(const std::vector<Coloring>& cs) {
    std::vector<Coloring> reps;
    std::vector<std::vector<int>> seen;
    for (const Coloring& c : cs) {
        const int p = c.p;
        std::vector<int> best;
        for (int a = 1; a < p; ++a) {
            if (unit_inverse(a, p) == -1) continue;
            for (int b = 0; b < p; ++b) {
                std::vector<int> img(c.colors.size());
                for (size_t i = 0; i < c.colors.size(); ++i)
                    img[i] = mod(1LL * a * c.colors[i] + b, p);
                if (best.empty() || img < best) best = std::move(img);
            }
        }
        if (std::find(seen.begin(), seen.end(), best) == seen.end()) {
            seen.push_back(best);
            reps.push_back(Coloring{p, c.q, best});
        }
    }
    std::sort(reps.begin(), reps.end(),
              [](const Coloring& x, const Coloring& y) { return x.colors < y.colors; });
    return reps;
}

bool is_colorable(const OrientedDiagram& d, int p) {
    return !fox_colorings(d, p).empty();
}

std::vector<int> parse_coloring(const std::string& text) {
    std::string spaced = text;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream in(spaced);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw RangeError("bad residue '" + tok + "'");
        }
        if (used != tok.size() || v < 0)
            throw RangeError("bad residue '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw RangeError("empty coloring");
    return out;
}

}  // namespace dln
