#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "adjalg/graph.hpp"
#include "adjalg/rational.hpp"

namespace adjalg {

struct ReportGraph {
    std::size_t n = 0;
    std::size_t m = 0;
    std::optional<std::size_t> regular;  // valency when all degrees agree
    std::size_t diameter = 0;

    bool operator==(const ReportGraph&) const = default;
};

struct ReportIntersectionArray {
    std::vector<std::size_t> b;
    std::vector<std::size_t> c;

    bool operator==(const ReportIntersectionArray&) const = default;
};

struct ReportDrg {
    bool is_drg = false;
    std::string reason;  // success | not_regular | non_binary_matrix | zero_before_diameter
    std::optional<std::size_t> failure_index;
    std::optional<ReportIntersectionArray> intersection_array;  // present iff is_drg

    bool operator==(const ReportDrg&) const = default;
};

struct ReportQp {
    bool value = false;
    std::size_t d = 0;
    std::size_t r = 0;
    bool reduced_form_is_identity = false;
    std::size_t walk_vector_count = 0;

    bool operator==(const ReportQp&) const = default;
};

struct ReportBasis {
    std::vector<std::vector<Rational>> polynomials;     // coefficient lists, constant term first
    std::vector<std::vector<std::string>> idempotents;  // one 0-1 string per matrix row
    std::size_t identity_index = 0;

    bool operator==(const ReportBasis&) const = default;
};

struct ReportClosureFailure {
    std::string kind;  // non_binary_entry | product_outside_span
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t row = 0;
    std::size_t col = 0;
    std::optional<Rational> entry;  // offending value, for non_binary_entry

    bool operator==(const ReportClosureFailure&) const = default;
};

// Exactly one of the three members is set.
struct ReportBasisSection {
    std::optional<ReportBasis> basis;
    std::optional<ReportClosureFailure> failure;
    std::optional<std::string> unavailable;  // precondition text, e.g. non-regular input

    bool operator==(const ReportBasisSection&) const = default;
};

struct ReportDiagram {
    bool common = false;
    std::vector<std::vector<std::size_t>> cells;  // around base vertex 0
    std::vector<std::size_t> cell_sizes;
    std::vector<std::vector<Rational>> quotient;  // row-major, empty when unavailable
    std::size_t rank = 0;
    std::optional<bool> concluded_qp;

    bool operator==(const ReportDiagram&) const = default;
};

struct ReportDiameter2 {
    std::string classification;  // case_i | case_ii | both | neither | not_applicable
    std::vector<Rational> lambda_values;
    std::vector<Rational> mu_values;

    bool operator==(const ReportDiameter2&) const = default;
};

struct AnalysisReport {
    ReportGraph graph;
    std::size_t distinct_eigenvalues = 0;  // d+1
    ReportDrg distance_regular;
    ReportQp quotient_polynomial;
    ReportBasisSection standard_basis;
    std::vector<std::optional<std::vector<Rational>>> distance_polynomials;  // index = distance
    std::optional<std::vector<Rational>> hoffman_polynomial;
    ReportDiagram diagram;
    ReportDiameter2 diameter2;

    bool operator==(const AnalysisReport&) const = default;
};

// Runs the whole pipeline on a connected graph. Disconnected input
// throws DisconnectedError. Sections with preconditions of their own
// (the standard basis needs a regular graph) are marked unavailable in
// the report instead of failing the run.
AnalysisReport analyze(const Graph& g);

// JSON serialization. The document carries "schema": "1"; rationals
// are "num/den" strings; polynomials appear both as coefficient lists
// and as rendered display strings (the latter are regenerated on
// output, not stored). report_from_json throws ParseError on anything
// unexpected, and report_from_json(report_to_json(r)) == r exactly.
std::string report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const std::string& text);

// Plain-text rendering for terminal output.
std::string render_report(const AnalysisReport& report);

}  // namespace adjalg
