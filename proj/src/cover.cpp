#include "dln/cover.hpp"

#include <sstream>

namespace dln {

ArrowSet initial_configuration(const Coloring& col) {
    const int p = col.p, c0 = col.colors.at(0);
    ArrowSet arrows;
    arrows.reserve(col.q + 1);
    arrows.emplace_back(c0, c0);  // degenerate arrow 0
    for (int j = 1; j <= col.q; ++j)
        arrows.emplace_back(((c0 - j) % p + p) % p, (c0 + j) % p);
    return arrows;
}

ConfigurationDiagram build_configurations(const OrientedDiagram& d, const Coloring& col) {
    return build_configurations(d, col, initial_configuration(col));
}

ConfigurationDiagram build_configurations(const OrientedDiagram& d, const Coloring& col,
                                          const ArrowSet& arc0) {
    const int p = col.p, q = col.q, n = d.n;
    if (n % 2 != 0) throw OddLength();
    if (!satisfies_fox(d, col))
        throw InvalidColoring("coloring violates the Fox condition");
    if (static_cast<int>(arc0.size()) != q + 1)
        throw RangeError("arc-0 arrow set needs q+1 arrows");

    ConfigurationDiagram cfg;
    cfg.p = p;
    cfg.q = q;
    cfg.n = n;
    cfg.head.assign(n, std::vector<int>(q + 1));
    cfg.tail.assign(n, std::vector<int>(q + 1));

    auto check_arc = [&](int i) {
        if (cfg.head[i][0] != col.colors[i] || cfg.tail[i][0] != col.colors[i])
            throw ClosureFailure();
        std::vector<char> covered(p, 0);
        for (int j = 1; j <= q; ++j) {
            int h = cfg.head[i][j], t = cfg.tail[i][j];
            if (h == t || h == col.colors[i] || t == col.colors[i]) throw ClosureFailure();
            if (h < 0 || h >= p || t < 0 || t >= p) throw ClosureFailure();
            if (reflect(t, col.colors[i], p) != h) throw ClosureFailure();
            ++covered[h];
            ++covered[t];
        }
        // the q arrows partition the vertices away from c(i)
        for (int v = 0; v < p; ++v)
            if (covered[v] != (v == col.colors[i] ? 0 : 1)) throw ClosureFailure();
    };

    for (int j = 0; j <= q; ++j) {
        cfg.tail[0][j] = arc0[j].first;
        cfg.head[0][j] = arc0[j].second;
    }
    try {
        check_arc(0);  // arc 0 is caller input, not a propagation result
    } catch (const ClosureFailure&) {
        throw RangeError("arc-0 arrows must pair v with 2c(0)-v and cover all vertices but c(0)");
    }
    for (int i = 0; i + 1 < n; ++i) {
        int m = col.colors[d.over[i]];
        for (int j = 0; j <= q; ++j) {
            cfg.tail[i + 1][j] = reflect(cfg.tail[i][j], m, p);
            cfg.head[i + 1][j] = reflect(cfg.head[i][j], m, p);
        }
        check_arc(i + 1);
    }
    // closure: the last reflection must reproduce arc 0 exactly
    int m = col.colors[d.over[n - 1]];
    for (int j = 0; j <= q; ++j) {
        if (reflect(cfg.tail[n - 1][j], m, p) != cfg.tail[0][j]) throw ClosureFailure();
        if (reflect(cfg.head[n - 1][j], m, p) != cfg.head[0][j]) throw ClosureFailure();
    }
    return cfg;
}

std::pair<int, int> ab(const ConfigurationDiagram& cfg, const OrientedDiagram& d,
                       int i, int j) {
    const int o = d.over[i];
    int a = -1, b = -1;
    for (int s = 0; s <= cfg.q; ++s) {
        if (cfg.head[i][j] == cfg.head[o][s] || cfg.head[i][j] == cfg.tail[o][s]) a = s;
        if (cfg.tail[i][j] == cfg.head[o][s] || cfg.tail[i][j] == cfg.tail[o][s]) b = s;
    }
    if (a < 0 || b < 0) throw ClosureFailure();  // partition invariant broken
    return {a, b};
}

std::pair<int, int> eps(const ConfigurationDiagram& cfg, const OrientedDiagram& d,
                        int i, int j) {
    const int o = d.over[i];
    auto [a, b] = ab(cfg, d, i, j);
    int ea = 0, eb = 0;
    if (a != 0) ea = (cfg.head[i][j] == cfg.head[o][a]) ? 1 : -1;
    if (b != 0) eb = (cfg.tail[i][j] == cfg.tail[o][b]) ? 1 : -1;
    return {ea, eb};
}

std::pair<int, int> cconst(const ConfigurationDiagram& cfg, const OrientedDiagram& d,
                           int i, int j, int k) {
    auto [a, b] = ab(cfg, d, i, j);
    auto [ea, eb] = eps(cfg, d, i, j);
    int sg = d.sign[i];
    int ca = 0, cb = 0;
    if (a == k && (k == 0 || sg * ea == -1)) ca = -sg;
    if (b == k && (k == 0 || sg * eb == 1)) cb = sg;
    return {ca, cb};
}

int CoefficientTables::c_a(int i, int j, int k) const {
    if (a[i][j] == k && (k == 0 || sign[i] * eps_a[i][j] == -1)) return -sign[i];
    return 0;
}

int CoefficientTables::c_b(int i, int j, int k) const {
    if (b[i][j] == k && (k == 0 || sign[i] * eps_b[i][j] == 1)) return sign[i];
    return 0;
}

CoefficientTables coefficient_tables(const ConfigurationDiagram& cfg,
                                     const OrientedDiagram& d) {
    CoefficientTables t;
    t.n = cfg.n;
    t.q = cfg.q;
    t.over = d.over;
    t.sign = d.sign;
    t.a.assign(t.n, std::vector<int>(t.q + 1));
    t.b.assign(t.n, std::vector<int>(t.q + 1));
    t.eps_a.assign(t.n, std::vector<int>(t.q + 1));
    t.eps_b.assign(t.n, std::vector<int>(t.q + 1));
    for (int i = 0; i < t.n; ++i) {
        for (int j = 0; j <= t.q; ++j) {
            auto [a, b] = ab(cfg, d, i, j);
            auto [ea, eb] = eps(cfg, d, i, j);
            t.a[i][j] = a;
            t.b[i][j] = b;
            t.eps_a[i][j] = ea;
            t.eps_b[i][j] = eb;
        }
    }
    return t;
}

std::string dump(const ConfigurationDiagram& cfg) {
    std::ostringstream out;
    for (int i = 0; i < cfg.n; ++i) {
        out << i << ":";
        for (int j = 1; j <= cfg.q; ++j)
            out << " " << j << ":(" << cfg.tail[i][j] << "->" << cfg.head[i][j] << ")";
        out << "\n";
    }
    return out.str();
}

}  // namespace dln
