#ifndef DLN_ERRORS_HPP
#define DLN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dln {

// Input errors (bad braid text, bad lists, bad p, ...).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyWord : ParseError {
    EmptyWord() : ParseError("empty braid word") {}
};
struct ZeroLetter : ParseError {
    ZeroLetter() : ParseError("braid letter 0 is not a generator") {}
};
struct NotAKnot : ParseError {
    NotAKnot() : ParseError("braid closure has more than one component") {}
};
struct OddLength : ParseError {
    OddLength() : ParseError("diagram needs an even number of crossings") {}
};
struct LengthMismatch : ParseError {
    LengthMismatch() : ParseError("overstrand and sign lists differ in length") {}
};
struct RangeError : ParseError {
    explicit RangeError(const std::string& what) : ParseError(what) {}
};
struct UnsupportedP : ParseError {
    explicit UnsupportedP(int p)
        : ParseError("p must be odd and >= 3, got " + std::to_string(p)) {}
};
struct InvalidColoring : ParseError {
    explicit InvalidColoring(const std::string& what) : ParseError(what) {}
};
struct DimensionMismatch : ParseError {
    DimensionMismatch() : ParseError("vector length does not match system size") {}
};
struct NotSolvable : std::runtime_error {
    NotSolvable() : std::runtime_error("chain system has no solution") {}
};

// Hard internal checks.  These indicate a bug, not bad input: the theory
// guarantees closure for even n and a valid coloring, and symmetry of the
// finite linking numbers.
struct ClosureFailure : std::logic_error {
    ClosureFailure() : std::logic_error("configuration diagram failed to close up") {}
};
struct SymmetryViolation : std::logic_error {
    SymmetryViolation() : std::logic_error("lk(K^j,K^k) != lk(K^k,K^j)") {}
};

}  // namespace dln

#endif
