// Command-line front end: coloring enumeration, single-knot linking matrices,
// and batch tabulation over a knot list.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dln/tabulate.hpp"

namespace {

struct KnotInput {
    std::string braid;
    std::string overstrands;
    std::string signs;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::string spaced = text;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream in(spaced);
    std::vector<int> out;
    int v;
    while (in >> v) out.push_back(v);
    if (!in.eof()) throw dln::RangeError("bad integer list '" + text + "'");
    return out;
}

dln::OrientedDiagram diagram_from_input(const KnotInput& in) {
    if (!in.braid.empty()) {
        if (!in.overstrands.empty() || !in.signs.empty())
            throw dln::RangeError("give either --braid or --overstrands/--signs, not both");
        return dln::braid_closure(dln::ensure_even(dln::parse_braid(in.braid)));
    }
    if (in.overstrands.empty() || in.signs.empty())
        throw dln::RangeError("need --braid or both --overstrands and --signs");
    return dln::diagram_from_lists(parse_int_list(in.overstrands),
                                   parse_int_list(in.signs));
}

void require_odd_p(int p) {
    if (p < 3 || p % 2 == 0) throw dln::UnsupportedP(p);
}

std::string colors_csv(const std::vector<int>& colors) {
    std::string out;
    for (size_t i = 0; i < colors.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(colors[i]);
    }
    return out;
}

dln::Coloring validated_coloring(const dln::OrientedDiagram& d, int p,
                                 const std::vector<int>& colors) {
    dln::Coloring c{p, (p - 1) / 2, colors};
    if (static_cast<int>(colors.size()) != d.n)
        throw dln::InvalidColoring("coloring has " + std::to_string(colors.size()) +
                                   " entries for " + std::to_string(d.n) + " arcs");
    for (int x : colors)
        if (x < 0 || x >= p) throw dln::InvalidColoring("residue out of range");
    if (!dln::satisfies_fox(d, c))
        throw dln::InvalidColoring("Fox condition fails");
    bool nontrivial = false;
    int g = 0;
    for (int x : colors) {
        if (x != colors[0]) nontrivial = true;
        g = std::gcd(g, x - colors[0]);
    }
    if (!nontrivial || std::gcd(g, p) != 1)
        throw dln::InvalidColoring("coloring is not surjective onto the dihedral group");
    return c;
}

int cmd_colorings(int p, const KnotInput& input) {
    require_odd_p(p);
    auto d = diagram_from_input(input);
    for (const dln::Coloring& c : dln::equivalence_classes(dln::fox_colorings(d, p)))
        std::cout << colors_csv(c.colors) << "\n";
    return 0;
}

std::string matrix_row_text(const std::vector<dln::ExtendedRational>& row) {
    std::string out;
    for (size_t k = 0; k < row.size(); ++k) {
        if (k) out += " ";
        out += dln::to_string(row[k]);
    }
    return out;
}

std::string multiset_text(const std::vector<dln::ExtendedRational>& ms) {
    std::string out;
    for (size_t i = 0; i < ms.size(); ++i) {
        if (i) out += ", ";
        out += dln::to_string(ms[i]);
    }
    return out;
}

int cmd_dln(int p, const KnotInput& input, const std::string& coloring_text,
            const std::string& format, bool mirror_diagram, const std::string& name) {
    require_odd_p(p);
    auto d = diagram_from_input(input);
    if (mirror_diagram) d = dln::mirror(d);

    std::vector<dln::Coloring> colorings;
    if (!coloring_text.empty()) {
        colorings.push_back(validated_coloring(d, p, dln::parse_coloring(coloring_text)));
    } else {
        colorings = dln::equivalence_classes(dln::fox_colorings(d, p));
    }

    std::vector<dln::DLNResult> results;
    results.reserve(colorings.size());
    for (const auto& c : colorings) results.push_back(dln::dln(d, c));

    if (format == "json") {
        nlohmann::json j;
        j["name"] = name;
        j["p"] = p;
        j["colorings"] = nlohmann::json::array();
        for (size_t i = 0; i < colorings.size(); ++i) {
            nlohmann::json jc;
            jc["colors"] = colorings[i].colors;
            auto jm = nlohmann::json::array();
            for (const auto& row : results[i].matrix) {
                auto jr = nlohmann::json::array();
                for (const auto& v : row) jr.push_back(dln::to_string(v));
                jm.push_back(jr);
            }
            jc["matrix"] = jm;
            auto js = nlohmann::json::array();
            for (const auto& v : results[i].multiset) js.push_back(dln::to_string(v));
            jc["multiset"] = js;
            j["colorings"].push_back(jc);
        }
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "coloring,multiset,matrix\n";
        for (size_t i = 0; i < colorings.size(); ++i) {
            std::string mat;
            for (size_t r = 0; r < results[i].matrix.size(); ++r) {
                if (r) mat += "; ";
                mat += matrix_row_text(results[i].matrix[r]);
            }
            std::cout << "\"" << colors_csv(colorings[i].colors) << "\",\""
                      << multiset_text(results[i].multiset) << "\",\"" << mat << "\"\n";
        }
    } else {
        for (size_t i = 0; i < colorings.size(); ++i) {
            std::cout << "coloring: " << colors_csv(colorings[i].colors) << "\n";
            std::cout << "matrix:\n";
            for (const auto& row : results[i].matrix)
                std::cout << "  " << matrix_row_text(row) << "\n";
            std::cout << "multiset: " << multiset_text(results[i].multiset) << "\n";
            if (i + 1 < colorings.size()) std::cout << "\n";
        }
    }
    return 0;
}

int cmd_tabulate(int p, const std::string& input_path, const std::string& output_path,
                 const std::string& format, int jobs, bool per_coloring, bool mirror_diagram) {
    require_odd_p(p);
    std::ifstream in(input_path);
    if (!in) throw dln::RangeError("cannot open input file '" + input_path + "'");
    std::vector<std::string> errors;
    auto records = dln::read_knot_csv(in, errors);
    auto result = dln::tabulate(records, p, jobs, per_coloring, mirror_diagram);
    errors.insert(errors.end(), result.errors.begin(), result.errors.end());

    std::string rendered = format == "text" ? dln::render_text(result, p, per_coloring)
                                            : dln::render_csv(result, p, per_coloring);
    if (output_path == "-") {
        std::cout << rendered;
    } else {
        std::ofstream out(output_path);
        if (!out) throw dln::RangeError("cannot open output file '" + output_path + "'");
        out << rendered;
    }
    if (!errors.empty()) {
        std::ofstream err(output_path == "-" ? "tabulate.errors" : output_path + ".errors");
        for (const auto& e : errors) err << e << "\n";
        std::cerr << errors.size() << " row(s) failed; see error sidecar\n";
    }
    // exit 0 if anything succeeded (or nothing failed)
    return (!result.rows.empty() || errors.empty()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dihedral linking numbers of Fox p-colored knots"};
    app.require_subcommand(1);

    int p = 3;
    KnotInput input;
    std::string coloring_text, format = "text", name = "knot";
    bool mirror_diagram = false;

    auto add_knot_opts = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "odd modulus p >= 3")->required();
        cmd->add_option("--braid", input.braid, "braid word, e.g. \"1 -2 1 -2\"");
        cmd->add_option("--overstrands", input.overstrands, "comma-separated o(i) list");
        cmd->add_option("--signs", input.signs, "comma-separated +1/-1 list");
    };

    CLI::App* colorings = app.add_subcommand("colorings", "canonical coloring classes");
    add_knot_opts(colorings);

    CLI::App* dlncmd = app.add_subcommand("dln", "linking matrix and invariant multiset");
    add_knot_opts(dlncmd);
    dlncmd->add_option("--coloring", coloring_text, "explicit coloring (comma-separated)");
    dlncmd->add_option("--format", format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    dlncmd->add_flag("--mirror", mirror_diagram, "negate all crossing signs");
    dlncmd->add_option("--name", name, "knot name for json output");

    std::string input_path, output_path = "-";
    int jobs = 1;
    bool per_coloring = false;
    CLI::App* tab = app.add_subcommand("tabulate", "batch tabulation over a CSV knot list");
    tab->add_option("--p", p, "odd modulus p >= 3")->required();
    tab->add_option("--input", input_path, "CSV with header name,braid[,determinant]")->required();
    tab->add_option("--output", output_path, "output file, - for stdout");
    tab->add_option("--format", format, "csv|text")->check(CLI::IsMember({"csv", "text"}));
    tab->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    tab->add_flag("--per-coloring", per_coloring, "include per-class multisets");
    tab->add_flag("--mirror", mirror_diagram, "negate all crossing signs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(colorings)) return cmd_colorings(p, input);
        if (app.got_subcommand(dlncmd))
            return cmd_dln(p, input, coloring_text, format, mirror_diagram, name);
        if (app.got_subcommand(tab)) {
            if (tab->count("--format") == 0) format = "csv";
            return cmd_tabulate(p, input_path, output_path, format, jobs, per_coloring,
                                mirror_diagram);
        }
    } catch (const dln::InvalidColoring& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const dln::UnsupportedP& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dln::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
