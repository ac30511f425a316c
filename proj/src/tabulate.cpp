#include "dln/tabulate.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <sstream>
#include <thread>

namespace dln {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string join_values(const std::vector<ExtendedRational>& vs) {
    std::string out;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ", ";
        out += to_string(vs[i]);
    }
    return out;
}

}  // namespace

std::vector<KnotRecord> read_knot_csv(std::istream& in, std::vector<std::string>& errors) {
    std::vector<KnotRecord> records;
    std::string line;
    bool header_seen = false;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto fields = split_csv_line(line);
        if (!header_seen) {
            header_seen = true;
            if (fields.size() < 2 || trim(fields[0]) != "name" || trim(fields[1]) != "braid") {
                errors.push_back("line 1: expected header name,braid[,determinant]");
            }
            continue;
        }
        if (fields.size() < 2) {
            errors.push_back("line " + std::to_string(lineno) + ": too few fields");
            continue;
        }
        KnotRecord rec;
        rec.name = trim(fields[0]);
        rec.braid = trim(fields[1]);
        if (rec.name.empty()) {
            errors.push_back("line " + std::to_string(lineno) + ": empty name");
            continue;
        }
        if (fields.size() >= 3 && !trim(fields[2]).empty()) {
            try {
                long det = std::stol(trim(fields[2]));
                if (det <= 0) throw std::invalid_argument("determinant");
                rec.determinant = det;
            } catch (const std::exception&) {
                errors.push_back("line " + std::to_string(lineno) + ": bad determinant '" +
                                 trim(fields[2]) + "'");
                continue;
            }
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<ExtendedRational> dln_value_set(const OrientedDiagram& d, int p,
                                            std::vector<std::vector<ExtendedRational>>* per_class) {
    auto classes = equivalence_classes(fox_colorings(d, p));
    std::vector<ExtendedRational> values;
    for (const Coloring& c : classes) {
        DLNResult r = dln::dln(d, c);
        if (per_class) per_class->push_back(r.multiset);
        values.insert(values.end(), r.multiset.begin(), r.multiset.end());
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

TabulationResult tabulate(const std::vector<KnotRecord>& records, int p, int jobs,
                          bool per_coloring, bool mirror_diagrams) {
    if (p < 3 || p % 2 == 0) throw UnsupportedP(p);
    struct Slot {
        bool has_row = false;
        TabulationRow row;
        std::string error;
    };
    std::vector<Slot> slots(records.size());

    auto work_one = [&](size_t idx) {
        const KnotRecord& rec = records[idx];
        Slot& slot = slots[idx];
        try {
            BraidWord w = ensure_even(parse_braid(rec.braid));
            OrientedDiagram d = braid_closure(w);
            if (mirror_diagrams) d = mirror(d);
            std::vector<std::vector<ExtendedRational>> per;
            auto values = dln_value_set(d, p, per_coloring ? &per : nullptr);
            if (values.empty()) return;  // not p-colorable: no row
            slot.row = TabulationRow{rec.name, p, std::move(values), std::move(per)};
            slot.has_row = true;
        } catch (const std::exception& e) {
            slot.error = rec.name + ": " + e.what();
        }
    };

    if (jobs <= 1) {
        for (size_t i = 0; i < records.size(); ++i) work_one(i);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < records.size(); i = next.fetch_add(1))
                work_one(i);
        };
        std::vector<std::thread> pool;
        int count = std::min<int>(jobs, static_cast<int>(records.size()));
        pool.reserve(count);
        for (int t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    TabulationResult out;
    for (Slot& s : slots) {
        if (!s.error.empty()) out.errors.push_back(std::move(s.error));
        else if (s.has_row) out.rows.push_back(std::move(s.row));
    }
    return out;
}

std::string render_csv(const TabulationResult& result, int p, bool per_coloring) {
    std::ostringstream out;
    out << "name,p,values";
    if (per_coloring) out << ",per_coloring";
    out << "\n";
    for (const TabulationRow& row : result.rows) {
        out << csv_quote(row.name) << "," << p << "," << csv_quote(join_values(row.values));
        if (per_coloring) {
            std::string per;
            for (size_t i = 0; i < row.per_coloring.size(); ++i) {
                if (i) per += " | ";
                per += join_values(row.per_coloring[i]);
            }
            out << "," << csv_quote(per);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_text(const TabulationResult& result, [[maybe_unused]] int p, bool per_coloring) {
    std::ostringstream out;
    for (const TabulationRow& row : result.rows) {
        out << row.name << " | " << join_values(row.values);
        if (per_coloring) {
            out << "  [";
            for (size_t i = 0; i < row.per_coloring.size(); ++i) {
                if (i) out << " | ";
                out << join_values(row.per_coloring[i]);
            }
            out << "]";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace dln
