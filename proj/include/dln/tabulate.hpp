#ifndef DLN_TABULATE_HPP
#define DLN_TABULATE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dln/linking.hpp"

namespace dln {

// One row of an input knot list: "name,braid[,determinant]".
struct KnotRecord {
    std::string name;
    std::string braid;
    std::optional<long> determinant;  // metadata only, never trusted
};

// Per-knot tabulation output: the deduplicated sorted union of the linking
// multisets over all coloring classes, plus optionally the full multiset per
// class.
struct TabulationRow {
    std::string name;
    int p = 3;
    std::vector<ExtendedRational> values;
    std::vector<std::vector<ExtendedRational>> per_coloring;
};

struct TabulationResult {
    std::vector<TabulationRow> rows;      // knots with at least one coloring
    std::vector<std::string> errors;      // "name: message" per failed row
};

// Parses a CSV with header name,braid[,determinant].  Quoted fields with
// embedded commas are handled; malformed rows go to `errors`.
std::vector<KnotRecord> read_knot_csv(std::istream& in, std::vector<std::string>& errors);

// Computes DLN for every record, one worker per knot up to `jobs` threads.
// Output order follows input order regardless of the thread count; knots
// without p-colorings are skipped silently, per-row failures land in errors.
TabulationResult tabulate(const std::vector<KnotRecord>& records, int p, int jobs,
                          bool per_coloring, bool mirror_diagrams = false);

std::string render_csv(const TabulationResult& result, int p, bool per_coloring);
std::string render_text(const TabulationResult& result, int p, bool per_coloring);

// Dedup across coloring classes of one diagram (the engine behind tabulate).
std::vector<ExtendedRational> dln_value_set(const OrientedDiagram& d, int p,
                                            std::vector<std::vector<ExtendedRational>>* per_class = nullptr);

}  // namespace dln

#endif
