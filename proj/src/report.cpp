#include "adjalg/report.hpp"

#include <sstream>
#include <utility>
#include <variant>

#include <json.hpp>

#include "adjalg/algebra.hpp"
#include "adjalg/errors.hpp"
#include "adjalg/polynomial.hpp"
#include "adjalg/spectral.hpp"
#include "adjalg/structure.hpp"
#include "adjalg/walkpart.hpp"

namespace adjalg {

namespace {

using nlohmann::json;

std::string reason_string(DrgReason reason) {
    switch (reason) {
        case DrgReason::Success: return "success";
        case DrgReason::NotRegular: return "not_regular";
        case DrgReason::NonBinaryMatrix: return "non_binary_matrix";
        case DrgReason::ZeroBeforeDiameter: return "zero_before_diameter";
    }
    throw Error("unknown distance-regularity reason");
}

std::string classification_string(Diameter2Class verdict) {
    switch (verdict) {
        case Diameter2Class::CaseI: return "case_i";
        case Diameter2Class::CaseII: return "case_ii";
        case Diameter2Class::Both: return "both";
        case Diameter2Class::Neither: return "neither";
        case Diameter2Class::NotApplicable: return "not_applicable";
    }
    throw Error("unknown diameter-2 classification");
}

std::vector<std::string> bitmap_rows(const RationalMatrix& m) {
    std::vector<std::string> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string row(m.cols(), '0');
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) == 1) row[j] = '1';
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<Rational>> matrix_rows(const RationalMatrix& m) {
    std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    }
    return rows;
}

json rational_list(const std::vector<Rational>& values) {
    json out = json::array();
    for (const Rational& v : values) out.push_back(to_string(v));
    return out;
}

std::vector<Rational> parse_rational_list(const json& j) {
    if (!j.is_array()) throw ParseError("report: expected an array of rationals");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(parse_rational(item.get<std::string>()));
    return out;
}

json polynomial_json(const std::vector<Rational>& coeffs) {
    json out;
    out["coefficients"] = rational_list(coeffs);
    out["display"] = Polynomial(coeffs).to_string();
    return out;
}

std::vector<Rational> parse_polynomial(const json& j) {
    return parse_rational_list(j.at("coefficients"));
}

}  // namespace

AnalysisReport analyze(const Graph& g) {
    AnalysisReport rep;
    const DistanceData dd = distance_data(g);
    rep.graph.n = g.n;
    rep.graph.m = g.edge_count();
    rep.graph.regular = is_regular(g);
    rep.graph.diameter = dd.diameter;
    rep.distinct_eigenvalues = count_distinct_eigenvalues(g.adjacency);

    const DrgVerdict verdict = is_distance_regular(g);
    rep.distance_regular.is_drg = verdict.is_drg;
    rep.distance_regular.reason = reason_string(verdict.reason);
    rep.distance_regular.failure_index = verdict.failure_index;
    if (verdict.intersection_array) {
        rep.distance_regular.intersection_array =
            ReportIntersectionArray{verdict.intersection_array->b, verdict.intersection_array->c};
    }

    const QpDiagnostics qp = is_quotient_polynomial(g);
    rep.quotient_polynomial =
        ReportQp{qp.value, qp.d, qp.r, qp.z_is_identity, qp.walk_vector_count};

    if (!rep.graph.regular) {
        rep.standard_basis.unavailable = "standard basis requires a regular graph";
    } else {
        const auto result = standard_basis(g);
        if (const StandardBasis* basis = std::get_if<StandardBasis>(&result)) {
            ReportBasis out;
            out.identity_index = basis->identity_index;
            for (const Polynomial& p : basis->basis_polynomials) {
                out.polynomials.push_back(p.coefficients());
            }
            for (const RationalMatrix& f : basis->F) out.idempotents.push_back(bitmap_rows(f));
            rep.standard_basis.basis = std::move(out);
        } else {
            const ClosureFailure& fail = std::get<ClosureFailure>(result);
            ReportClosureFailure out;
            out.kind = fail.kind == ClosureFailure::Kind::NonBinaryEntry ? "non_binary_entry"
                                                                         : "product_outside_span";
            out.i = fail.i;
            out.j = fail.j;
            out.row = fail.row;
            out.col = fail.col;
            if (fail.kind == ClosureFailure::Kind::NonBinaryEntry) out.entry = fail.value;
            rep.standard_basis.failure = std::move(out);
        }
    }

    for (const auto& p : distance_matrix_polynomials(g)) {
        if (p) {
            rep.distance_polynomials.emplace_back(p->coefficients());
        } else {
            rep.distance_polynomials.emplace_back(std::nullopt);
        }
    }

    if (const auto h = hoffman_polynomial(g)) rep.hoffman_polynomial = h->coefficients();

    const DiagramAnalysis diagram = faithful_diagram_analysis(g);
    rep.diagram.common = diagram.common;
    rep.diagram.cells = diagram.cells;
    rep.diagram.cell_sizes = diagram.signature.cell_sizes;
    rep.diagram.quotient = matrix_rows(diagram.signature.quotient);
    rep.diagram.rank = diagram.rank;
    rep.diagram.concluded_qp = diagram.concluded_qp;

    const Diameter2Report d2 = diameter2_four_ev_check(g);
    rep.diameter2.classification = classification_string(d2.verdict);
    rep.diameter2.lambda_values = d2.lambda_values;
    rep.diameter2.mu_values = d2.mu_values;
    return rep;
}

std::string report_to_json(const AnalysisReport& rep) {
    json j;
    j["schema"] = "1";
    j["graph"]["n"] = rep.graph.n;
    j["graph"]["m"] = rep.graph.m;
    j["graph"]["regular"] = rep.graph.regular ? json(*rep.graph.regular) : json(nullptr);
    j["graph"]["diameter"] = rep.graph.diameter;
    j["distinct_eigenvalues"] = rep.distinct_eigenvalues;

    json& drg = j["distance_regular"];
    drg["is_drg"] = rep.distance_regular.is_drg;
    drg["reason"] = rep.distance_regular.reason;
    drg["failure_index"] = rep.distance_regular.failure_index
                               ? json(*rep.distance_regular.failure_index)
                               : json(nullptr);
    if (rep.distance_regular.intersection_array) {
        drg["intersection_array"]["b"] = rep.distance_regular.intersection_array->b;
        drg["intersection_array"]["c"] = rep.distance_regular.intersection_array->c;
    } else {
        drg["intersection_array"] = nullptr;
    }

    json& qp = j["quotient_polynomial"];
    qp["value"] = rep.quotient_polynomial.value;
    qp["d"] = rep.quotient_polynomial.d;
    qp["r"] = rep.quotient_polynomial.r;
    qp["reduced_form_is_identity"] = rep.quotient_polynomial.reduced_form_is_identity;
    qp["walk_vector_count"] = rep.quotient_polynomial.walk_vector_count;

    json& basis = j["standard_basis"];
    if (rep.standard_basis.basis) {
        basis["status"] = "available";
        basis["identity_index"] = rep.standard_basis.basis->identity_index;
        basis["polynomials"] = json::array();
        for (const auto& coeffs : rep.standard_basis.basis->polynomials) {
            basis["polynomials"].push_back(polynomial_json(coeffs));
        }
        basis["idempotents"] = rep.standard_basis.basis->idempotents;
    } else if (rep.standard_basis.failure) {
        const ReportClosureFailure& fail = *rep.standard_basis.failure;
        basis["status"] = "closure_failure";
        basis["kind"] = fail.kind;
        basis["i"] = fail.i;
        basis["j"] = fail.j;
        basis["row"] = fail.row;
        basis["col"] = fail.col;
        basis["entry"] = fail.entry ? json(to_string(*fail.entry)) : json(nullptr);
    } else {
        basis["status"] = "not_applicable";
        basis["detail"] = rep.standard_basis.unavailable.value_or("");
    }

    j["distance_polynomials"] = json::array();
    for (const auto& p : rep.distance_polynomials) {
        j["distance_polynomials"].push_back(p ? polynomial_json(*p) : json(nullptr));
    }
    j["hoffman_polynomial"] =
        rep.hoffman_polynomial ? polynomial_json(*rep.hoffman_polynomial) : json(nullptr);

    json& diagram = j["diagram"];
    diagram["common"] = rep.diagram.common;
    diagram["cells"] = rep.diagram.cells;
    diagram["cell_sizes"] = rep.diagram.cell_sizes;
    diagram["quotient"] = json::array();
    for (const auto& row : rep.diagram.quotient) diagram["quotient"].push_back(rational_list(row));
    diagram["rank"] = rep.diagram.rank;
    diagram["concluded_quotient_polynomial"] =
        rep.diagram.concluded_qp ? json(*rep.diagram.concluded_qp) : json(nullptr);

    json& d2 = j["diameter2_classification"];
    d2["classification"] = rep.diameter2.classification;
    d2["lambda_values"] = rational_list(rep.diameter2.lambda_values);
    d2["mu_values"] = rational_list(rep.diameter2.mu_values);

    return j.dump(2);
}

AnalysisReport report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: invalid JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || j.at("schema").get<std::string>() != "1") {
            throw ParseError("report: unsupported schema");
        }
        AnalysisReport rep;
        const json& graph = j.at("graph");
        rep.graph.n = graph.at("n").get<std::size_t>();
        rep.graph.m = graph.at("m").get<std::size_t>();
        if (!graph.at("regular").is_null()) {
            rep.graph.regular = graph.at("regular").get<std::size_t>();
        }
        rep.graph.diameter = graph.at("diameter").get<std::size_t>();
        rep.distinct_eigenvalues = j.at("distinct_eigenvalues").get<std::size_t>();

        const json& drg = j.at("distance_regular");
        rep.distance_regular.is_drg = drg.at("is_drg").get<bool>();
        rep.distance_regular.reason = drg.at("reason").get<std::string>();
        if (!drg.at("failure_index").is_null()) {
            rep.distance_regular.failure_index = drg.at("failure_index").get<std::size_t>();
        }
        if (!drg.at("intersection_array").is_null()) {
            ReportIntersectionArray arr;
            arr.b = drg.at("intersection_array").at("b").get<std::vector<std::size_t>>();
            arr.c = drg.at("intersection_array").at("c").get<std::vector<std::size_t>>();
            rep.distance_regular.intersection_array = std::move(arr);
        }

        const json& qp = j.at("quotient_polynomial");
        rep.quotient_polynomial.value = qp.at("value").get<bool>();
        rep.quotient_polynomial.d = qp.at("d").get<std::size_t>();
        rep.quotient_polynomial.r = qp.at("r").get<std::size_t>();
        rep.quotient_polynomial.reduced_form_is_identity =
            qp.at("reduced_form_is_identity").get<bool>();
        rep.quotient_polynomial.walk_vector_count = qp.at("walk_vector_count").get<std::size_t>();

        const json& basis = j.at("standard_basis");
        const std::string status = basis.at("status").get<std::string>();
        if (status == "available") {
            ReportBasis out;
            out.identity_index = basis.at("identity_index").get<std::size_t>();
            for (const auto& p : basis.at("polynomials")) {
                out.polynomials.push_back(parse_polynomial(p));
            }
            out.idempotents =
                basis.at("idempotents").get<std::vector<std::vector<std::string>>>();
            rep.standard_basis.basis = std::move(out);
        } else if (status == "closure_failure") {
            ReportClosureFailure out;
            out.kind = basis.at("kind").get<std::string>();
            out.i = basis.at("i").get<std::size_t>();
            out.j = basis.at("j").get<std::size_t>();
            out.row = basis.at("row").get<std::size_t>();
            out.col = basis.at("col").get<std::size_t>();
            if (!basis.at("entry").is_null()) {
                out.entry = parse_rational(basis.at("entry").get<std::string>());
            }
            rep.standard_basis.failure = std::move(out);
        } else if (status == "not_applicable") {
            rep.standard_basis.unavailable = basis.at("detail").get<std::string>();
        } else {
            throw ParseError("report: unknown standard_basis status '" + status + "'");
        }

        for (const auto& p : j.at("distance_polynomials")) {
            if (p.is_null()) {
                rep.distance_polynomials.emplace_back(std::nullopt);
            } else {
                rep.distance_polynomials.emplace_back(parse_polynomial(p));
            }
        }
        if (!j.at("hoffman_polynomial").is_null()) {
            rep.hoffman_polynomial = parse_polynomial(j.at("hoffman_polynomial"));
        }

        const json& diagram = j.at("diagram");
        rep.diagram.common = diagram.at("common").get<bool>();
        rep.diagram.cells = diagram.at("cells").get<std::vector<std::vector<std::size_t>>>();
        rep.diagram.cell_sizes = diagram.at("cell_sizes").get<std::vector<std::size_t>>();
        for (const auto& row : diagram.at("quotient")) {
            rep.diagram.quotient.push_back(parse_rational_list(row));
        }
        rep.diagram.rank = diagram.at("rank").get<std::size_t>();
        if (!diagram.at("concluded_quotient_polynomial").is_null()) {
            rep.diagram.concluded_qp = diagram.at("concluded_quotient_polynomial").get<bool>();
        }

        const json& d2 = j.at("diameter2_classification");
        rep.diameter2.classification = d2.at("classification").get<std::string>();
        rep.diameter2.lambda_values = parse_rational_list(d2.at("lambda_values"));
        rep.diameter2.mu_values = parse_rational_list(d2.at("mu_values"));
        return rep;
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: malformed document: ") + e.what());
    }
}

std::string render_report(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "graph: n=" << rep.graph.n << ", m=" << rep.graph.m << ", ";
    if (rep.graph.regular) {
        out << *rep.graph.regular << "-regular";
    } else {
        out << "not regular";
    }
    out << ", diameter " << rep.graph.diameter << "\n";
    out << "distinct eigenvalues: " << rep.distinct_eigenvalues << "\n";

    out << "distance-regular: " << (rep.distance_regular.is_drg ? "yes" : "no");
    if (rep.distance_regular.is_drg) {
        const ReportIntersectionArray& arr = *rep.distance_regular.intersection_array;
        out << ", intersection array {";
        for (std::size_t i = 0; i < arr.b.size(); ++i) out << (i ? "," : "") << arr.b[i];
        out << ";";
        for (std::size_t i = 0; i < arr.c.size(); ++i) out << (i ? "," : "") << arr.c[i];
        out << "}";
    } else {
        out << " (" << rep.distance_regular.reason;
        if (rep.distance_regular.failure_index) {
            out << " at index " << *rep.distance_regular.failure_index;
        }
        out << ")";
    }
    out << "\n";

    out << "quotient-polynomial: " << (rep.quotient_polynomial.value ? "yes" : "no") << " (d="
        << rep.quotient_polynomial.d << ", r=" << rep.quotient_polynomial.r << ", "
        << rep.quotient_polynomial.walk_vector_count << " walk vectors)\n";

    if (rep.standard_basis.basis) {
        const ReportBasis& basis = *rep.standard_basis.basis;
        out << "standard basis: " << basis.polynomials.size()
            << " idempotents, identity at index " << basis.identity_index << "\n";
        for (std::size_t i = 0; i < basis.polynomials.size(); ++i) {
            out << "  p_" << i << "(t) = " << Polynomial(basis.polynomials[i]).to_string()
                << "\n";
        }
    } else if (rep.standard_basis.failure) {
        const ReportClosureFailure& fail = *rep.standard_basis.failure;
        out << "standard basis: none (" << fail.kind;
        if (fail.kind == "non_binary_entry") {
            out << ": candidate " << fail.i << " entry (" << fail.row << "," << fail.col
                << ") = " << to_string(fail.entry.value_or(Rational(0)));
        } else {
            out << ": product of candidates " << fail.i << " and " << fail.j;
        }
        out << ")\n";
    } else {
        out << "standard basis: " << rep.standard_basis.unavailable.value_or("unavailable")
            << "\n";
    }

    out << "distance polynomials:\n";
    for (std::size_t i = 0; i < rep.distance_polynomials.size(); ++i) {
        out << "  A_" << i << ": ";
        if (rep.distance_polynomials[i]) {
            out << Polynomial(*rep.distance_polynomials[i]).to_string();
        } else {
            out << "not a polynomial in A";
        }
        out << "\n";
    }

    out << "hoffman polynomial: ";
    if (rep.hoffman_polynomial) {
        out << Polynomial(*rep.hoffman_polynomial).to_string();
    } else {
        out << "none";
    }
    out << "\n";

    out << "diagram: ";
    if (rep.diagram.common) {
        out << "common to all base vertices, cell sizes [";
        for (std::size_t i = 0; i < rep.diagram.cell_sizes.size(); ++i) {
            out << (i ? "," : "") << rep.diagram.cell_sizes[i];
        }
        out << "], walk-count rank " << rep.diagram.rank;
        if (rep.diagram.concluded_qp && *rep.diagram.concluded_qp) {
            out << " (quotient-polynomial concluded)";
        }
    } else {
        out << "not common to all base vertices";
    }
    out << "\n";

    out << "diameter-2 classification: " << rep.diameter2.classification;
    if (rep.diameter2.classification != "not_applicable") {
        out << " (lambda {";
        for (std::size_t i = 0; i < rep.diameter2.lambda_values.size(); ++i) {
            out << (i ? "," : "") << to_string(rep.diameter2.lambda_values[i]);
        }
        out << "}, mu {";
        for (std::size_t i = 0; i < rep.diameter2.mu_values.size(); ++i) {
            out << (i ? "," : "") << to_string(rep.diameter2.mu_values[i]);
        }
        out << "})";
    }
    out << "\n";
    return out.str();
}

}  // namespace adjalg
