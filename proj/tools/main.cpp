#include <cctype>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adjalg/algebra.hpp"
#include "adjalg/errors.hpp"
#include "adjalg/genspec.hpp"
#include "adjalg/graph.hpp"
#include "adjalg/report.hpp"
#include "adjalg/spectral.hpp"
#include "adjalg/walkpart.hpp"

namespace {

using namespace adjalg;

Graph load(const std::string& argument) {
    std::vector<std::string> notes;
    Graph g = load_graph_argument(argument, &notes);
    for (const std::string& note : notes) std::cerr << "note: " << note << "\n";
    return g;
}

std::string canonical_family(const std::string& name) {
    std::string out = name;
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (c == '_') c = '-';
    }
    return out;
}

std::string strip_braces(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c != '{' && c != '}') out += c;
    }
    return out;
}

// Joins "gen" parameters into one generator expression. A first
// parameter that already contains '(' is taken as a complete inline
// expression.
std::string build_spec(const std::vector<std::string>& params) {
    const std::string& family = params[0];
    if (family.find('(') != std::string::npos) {
        if (params.size() != 1) {
            throw ParseError("gen: an inline expression takes no further parameters");
        }
        return family;
    }
    if (params.size() == 1) return family;
    const std::string norm = canonical_family(family);
    if (norm == "circulant") {
        if (params.size() < 3) {
            throw ParseError("gen: circulant needs a size and at least one offset");
        }
        std::string offsets;
        for (std::size_t i = 2; i < params.size(); ++i) {
            if (i > 2) offsets += ",";
            offsets += strip_braces(params[i]);
        }
        return "circulant(" + params[1] + ",{" + offsets + "})";
    }
    std::string args;
    for (std::size_t i = 1; i < params.size(); ++i) {
        if (i > 1) args += ",";
        args += params[i];
    }
    return family + "(" + args + ")";
}

void print_matrix(std::ostream& out, const RationalMatrix& m, const std::string& indent) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << indent;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << " ";
            out << to_string(m(i, j));
        }
        out << "\n";
    }
}

int run_gen(const std::vector<std::string>& params, const std::string& out_path) {
    const std::string spec = build_spec(params);
    std::vector<std::string> notes;
    const Graph g = parse_graph_spec(spec, &notes);
    for (const std::string& note : notes) std::cerr << "note: " << note << "\n";
    if (out_path.empty()) {
        write_edge_list(g, std::cout, spec);
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("gen: cannot open '" + out_path + "' for writing");
        write_edge_list(g, out, spec);
    }
    return 0;
}

int run_drg(const Graph& g) {
    const DrgVerdict verdict = is_distance_regular(g);
    std::cout << "distance-regular: " << (verdict.is_drg ? "yes" : "no") << "\n";
    if (verdict.is_drg) {
        const IntersectionArray& arr = *verdict.intersection_array;
        std::cout << "intersection array: {";
        for (std::size_t i = 0; i < arr.b.size(); ++i) std::cout << (i ? "," : "") << arr.b[i];
        std::cout << ";";
        for (std::size_t i = 0; i < arr.c.size(); ++i) std::cout << (i ? "," : "") << arr.c[i];
        std::cout << "}\n";
        return 0;
    }
    switch (verdict.reason) {
        case DrgReason::NotRegular:
            std::cout << "reason: the graph is not regular\n";
            break;
        case DrgReason::NonBinaryMatrix:
            std::cout << "reason: sequence matrix " << *verdict.failure_index
                      << " is not a 0-1 matrix\n";
            break;
        case DrgReason::ZeroBeforeDiameter:
            std::cout << "reason: sequence length disagrees with the diameter (index "
                      << *verdict.failure_index << ")\n";
            break;
        case DrgReason::Success:
            break;
    }
    return 0;
}

int run_basis(const Graph& g, bool polys) {
    const auto result = standard_basis(g);
    if (const ClosureFailure* fail = std::get_if<ClosureFailure>(&result)) {
        std::cout << "hadamard closed: no\n";
        if (fail->kind == ClosureFailure::Kind::NonBinaryEntry) {
            std::cout << "witness: candidate " << fail->i << " has entry (" << fail->row << ","
                      << fail->col << ") = " << to_string(fail->value) << "\n";
        } else {
            std::cout << "witness: the product of candidates " << fail->i << " and " << fail->j
                      << " leaves the span\n";
        }
        return 0;
    }
    const StandardBasis& basis = std::get<StandardBasis>(result);
    std::cout << "hadamard closed: yes\n";
    std::cout << "idempotents: " << basis.F.size() << " (identity at index "
              << basis.identity_index << ")\n";
    for (std::size_t i = 0; i < basis.F.size(); ++i) {
        std::cout << "F_" << i << ":\n";
        const RationalMatrix& f = basis.F[i];
        for (std::size_t r = 0; r < f.rows(); ++r) {
            std::cout << "  ";
            for (std::size_t c = 0; c < f.cols(); ++c) std::cout << (f(r, c) == 1 ? '1' : '0');
            std::cout << "\n";
        }
    }
    if (polys) {
        for (std::size_t i = 0; i < basis.basis_polynomials.size(); ++i) {
            const Polynomial& p = basis.basis_polynomials[i];
            std::cout << "p_" << i << "(t) = " << p.to_string() << "  [coefficients:";
            for (const Rational& c : p.coefficients()) std::cout << " " << to_string(c);
            std::cout << "]\n";
        }
    }
    return 0;
}

int run_walkpart(const Graph& g) {
    const WalkPartition part = walk_partition(g);
    std::cout << "d = " << part.d << ", r = " << part.r << ", classes = "
              << part.classes.size() << "\n";
    for (std::size_t i = 0; i < part.classes.size(); ++i) {
        const WalkClass& cls = part.classes[i];
        std::cout << "class " << i << ": distance " << cls.distance << ", pairs "
                  << cls.pairs.size() << ", walk vector (";
        for (std::size_t k = 0; k < cls.vector.size(); ++k) {
            std::cout << (k ? "," : "") << cls.vector[k].str();
        }
        std::cout << ")\n";
    }
    std::cout << "W:\n";
    print_matrix(std::cout, part.W, "  ");
    std::cout << "Z:\n";
    print_matrix(std::cout, part.Z, "  ");
    std::cout << "polynomials:\n";
    for (std::size_t i = 0; i < part.polys.size(); ++i) {
        std::cout << "  p_" << i << "(t) = " << part.polys[i].to_string() << "\n";
    }
    return 0;
}

int run_distpoly(const Graph& g) {
    const auto polys = distance_matrix_polynomials(g);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        std::cout << "A_" << i << " = ";
        if (polys[i]) {
            std::cout << polys[i]->to_string();
        } else {
            std::cout << "(not a polynomial in A)";
        }
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact adjacency-algebra analysis of finite graphs"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a named graph as an edge list");
    std::vector<std::string> gen_params;
    std::string gen_out;
    gen->add_option("family", gen_params, "family name followed by its parameters")
        ->required()
        ->expected(-1);
    gen->add_option("-o,--output", gen_out, "write the edge list to this file");

    std::string graph_arg;
    auto* eigcount = app.add_subcommand("eigcount", "number of distinct eigenvalues");
    eigcount->add_option("graph", graph_arg, "edge-list file or gen:<expression>")->required();
    auto* drg = app.add_subcommand("drg", "distance-regularity verdict");
    drg->add_option("graph", graph_arg, "edge-list file or gen:<expression>")->required();
    auto* basis = app.add_subcommand("basis", "standard basis of the adjacency algebra");
    basis->add_option("graph", graph_arg, "edge-list file or gen:<expression>")->required();
    bool basis_polys = false;
    basis->add_flag("--polys", basis_polys, "also print the basis polynomials");
    auto* walkpart_cmd = app.add_subcommand("walkpart", "walk-vector partition of the pairs");
    walkpart_cmd->add_option("graph", graph_arg, "edge-list file or gen:<expression>")->required();
    auto* distpoly = app.add_subcommand("distpoly", "per-distance polynomial table");
    distpoly->add_option("graph", graph_arg, "edge-list file or gen:<expression>")->required();
    auto* analyze_cmd = app.add_subcommand("analyze", "full analysis report");
    analyze_cmd->add_option("graph", graph_arg, "edge-list file or gen:<expression>")->required();
    bool as_json = false;
    analyze_cmd->add_flag("--json", as_json, "emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) return run_gen(gen_params, gen_out);
        if (eigcount->parsed()) {
            std::cout << count_distinct_eigenvalues(load(graph_arg).adjacency) << "\n";
            return 0;
        }
        if (drg->parsed()) return run_drg(load(graph_arg));
        if (basis->parsed()) return run_basis(load(graph_arg), basis_polys);
        if (walkpart_cmd->parsed()) return run_walkpart(load(graph_arg));
        if (distpoly->parsed()) return run_distpoly(load(graph_arg));
        if (analyze_cmd->parsed()) {
            const AnalysisReport report = analyze(load(graph_arg));
            if (as_json) {
                std::cout << report_to_json(report) << "\n";
            } else {
                std::cout << render_report(report);
            }
            return 0;
        }
    } catch (const adjalg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const adjalg::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
