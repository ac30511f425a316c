#include "dln/braid.hpp"

#include <algorithm>
#include <cstdlib>

#include <sstream>

namespace dln {

namespace {

// Permutation top-position -> bottom-position of the braid.
std::vector<int> underlying_permutation(const BraidWord& w) {
    std::vector<int> pos(w.strands);
    for (int i = 0; i < w.strands; ++i) pos[i] = i;
    for (int l : w.letters) {
        int g = std::abs(l) - 1;
        for (int& x : pos) {
            if (x == g)
                x = g + 1;
            else if (x == g + 1)
                x = g;
        }
    }
    return pos;
}

}  // namespace

bool closes_to_knot(const BraidWord& w) {
    auto perm = underlying_permutation(w);
    int cur = 0, len = 0;
    do {
        cur = perm[cur];
        ++len;
    } while (cur != 0);
    return len == w.strands;
}

BraidWord parse_braid(const std::string& text) {
    std::string spaced = text;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream in(spaced);
    BraidWord w;
    std::string tok;
    while (in >> tok) {
        size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw RangeError("bad braid letter '" + tok + "'");
        }
        if (used != tok.size()) throw RangeError("bad braid letter '" + tok + "'");
        if (v == 0) throw ZeroLetter();
        w.letters.push_back(v);
    }
    if (w.letters.empty()) throw EmptyWord();
    int m = 0;
    for (int l : w.letters) m = std::max(m, std::abs(l));
    w.strands = m + 1;
    if (!closes_to_knot(w)) throw NotAKnot();
    return w;
}

BraidWord ensure_even(const BraidWord& w) {
    if (w.letters.size() % 2 == 0) return w;
    BraidWord out = w;
    out.letters.push_back(w.strands);
    out.strands = w.strands + 1;
    return out;
}

OrientedDiagram braid_closure(const BraidWord& w) {
    if (w.letters.size() % 2 != 0) throw OddLength();
    if (!closes_to_knot(w)) throw NotAKnot();
    const int n = static_cast<int>(w.letters.size());

    // Walk the closure from the top of strand 1.  sigma_g: the strand at
    // position g+1 passes over and exits at g (a positive crossing with all
    // strands co-oriented); its inverse swaps over and under.
    struct Event {
        int word;  // index of the crossing in the word
        bool under;
    };
    std::vector<Event> events;
    int pos = 0;
    do {
        for (int wi = 0; wi < n; ++wi) {
            int l = w.letters[wi];
            int g = std::abs(l) - 1;
            if (pos == g) {
                events.push_back({wi, l > 0});
                pos = g + 1;
            } else if (pos == g + 1) {
                events.push_back({wi, l < 0});
                pos = g;
            }
        }
    } while (pos != 0);

    // Arcs are delimited by under-events; the arc holding the basepoint is
    // arc 0.  The crossing ending arc i becomes crossing i.
    std::vector<int> crossing_of_word(n, -1);
    std::vector<int> over_arc_of_word(n, -1);
    int arc = 0;
    std::vector<int> pending;
    for (const Event& e : events) {
        if (!e.under) {
            pending.push_back(e.word);
        } else {
            crossing_of_word[e.word] = arc;
            for (int pw : pending) over_arc_of_word[pw] = arc;
            pending.clear();
            ++arc;
        }
    }
    for (int pw : pending) over_arc_of_word[pw] = 0;  // tail of arc 0

    OrientedDiagram d;
    d.n = n;
    d.over.assign(n, 0);
    d.sign.assign(n, 0);
    for (int wi = 0; wi < n; ++wi) {
        int ci = crossing_of_word[wi];
        if (ci < 0 || over_arc_of_word[wi] < 0) throw NotAKnot();
        d.sign[ci] = w.letters[wi] > 0 ? 1 : -1;
        d.over[ci] = over_arc_of_word[wi];
    }
    return d;
}

OrientedDiagram diagram_from_lists(const std::vector<int>& over,
                                   const std::vector<int>& sign) {
    if (over.size() != sign.size()) throw LengthMismatch();
    if (over.empty() || over.size() % 2 != 0) throw OddLength();
    const int n = static_cast<int>(over.size());
    for (int o : over)
        if (o < 0 || o >= n) throw RangeError("overstrand index out of range");
    for (int s : sign)
        if (s != 1 && s != -1) throw RangeError("signs must be +1 or -1");
    return OrientedDiagram{n, over, sign};
}

OrientedDiagram mirror(const OrientedDiagram& d) {
    OrientedDiagram m = d;
    for (int& s : m.sign) s = -s;
    return m;
}

}  // namespace dln
