#include "adjalg/walkpart.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>

#include "adjalg/errors.hpp"
#include "adjalg/spectral.hpp"

namespace adjalg {

namespace {

struct WalkVectorHash {
    std::size_t operator()(const WalkVector& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (const auto& x : v) {
            h ^= std::hash<Integer>{}(x);
            h *= 1099511628211ULL;
        }
        return h;
    }
};

bool vector_less(const WalkVector& a, const WalkVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

WalkPartition walk_partition(const Graph& g) {
    const DistanceData dd = distance_data(g);
    const std::size_t n = g.n;
    const std::size_t d_plus_1 = count_distinct_eigenvalues(g.adjacency);
    const std::size_t d = d_plus_1 - 1;
    const std::vector<RationalMatrix> powers = matrix_powers(g.adjacency, d);

    std::unordered_map<WalkVector, std::size_t, WalkVectorHash> index;
    std::vector<WalkClass> classes;
    WalkVector v(d_plus_1);
    for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
            for (std::size_t k = 0; k < d_plus_1; ++k) {
                v[k] = to_integer(powers[k](y, z));
            }
            auto [it, inserted] = index.try_emplace(v, classes.size());
            if (inserted) {
                classes.push_back(WalkClass{v, dd.dist[y][z], {}});
            }
            WalkClass& cls = classes[it->second];
            if (cls.distance != dd.dist[y][z]) {
                throw Error("walk_partition: one walk vector spans two distances; this is a bug");
            }
            cls.pairs.emplace_back(y, z);
        }
    }

    std::sort(classes.begin(), classes.end(), [](const WalkClass& a, const WalkClass& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        return vector_less(a.vector, b.vector);
    });

    WalkPartition part;
    part.d = d;
    part.r = classes.size() - 1;
    part.class_matrices.reserve(classes.size());
    for (const WalkClass& cls : classes) {
        RationalMatrix m(n, n);
        for (const auto& [y, z] : cls.pairs) m(y, z) = 1;
        part.class_matrices.push_back(std::move(m));
    }

    RationalMatrix w(d_plus_1, classes.size());
    for (std::size_t j = 0; j < classes.size(); ++j) {
        for (std::size_t k = 0; k < d_plus_1; ++k) {
            w(k, j) = Rational(classes[j].vector[k]);
        }
    }
    RrefResult rref = rref_with_transform(w);
    if (rref.rank != d_plus_1) {
        throw Error("walk_partition: walk matrix lost row rank; this is a bug");
    }

    RationalMatrix z(rref.rank, rref.R.cols());
    for (std::size_t i = 0; i < rref.rank; ++i) {
        for (std::size_t j = 0; j < rref.R.cols(); ++j) z(i, j) = rref.R(i, j);
    }
    part.polys.reserve(rref.rank);
    for (std::size_t i = 0; i < rref.rank; ++i) {
        std::vector<Rational> coeffs(d_plus_1);
        for (std::size_t j = 0; j < d_plus_1; ++j) coeffs[j] = rref.T(i, j);
        part.polys.emplace_back(std::move(coeffs));
    }

    part.classes = std::move(classes);
    part.W = std::move(w);
    part.Z = std::move(z);
    part.transform = std::move(rref.T);
    part.pivots = std::move(rref.pivots);
    return part;
}

QpDiagnostics is_quotient_polynomial(const Graph& g) {
    const WalkPartition part = walk_partition(g);
    QpDiagnostics diag;
    diag.d = part.d;
    diag.r = part.r;
    diag.walk_vector_count = part.classes.size();
    diag.z_is_identity =
        part.Z.rows() == part.Z.cols() && part.Z == RationalMatrix::identity(part.Z.rows());
    const bool same_dimension = part.d == part.r;
    const bool count_matches = diag.walk_vector_count == part.d + 1;
    if (same_dimension != diag.z_is_identity || same_dimension != count_matches) {
        throw Error("is_quotient_polynomial: characterizations disagree; this is a bug");
    }
    diag.value = same_dimension;
    return diag;
}

std::vector<std::optional<Polynomial>> distance_matrix_polynomials(const Graph& g) {
    const WalkPartition part = walk_partition(g);
    const DistanceData dd = distance_data(g);
    const std::size_t classes = part.classes.size();

    std::vector<std::optional<Polynomial>> out(dd.diameter + 1);
    for (std::size_t i = 0; i <= dd.diameter; ++i) {
        std::vector<bool> in_target(classes, false);
        for (std::size_t j = 0; j < classes; ++j) {
            if (part.classes[j].distance == static_cast<int>(i)) in_target[j] = true;
        }
        std::vector<std::size_t> rows;
        for (std::size_t k = 0; k < part.pivots.size(); ++k) {
            if (in_target[part.pivots[k]]) rows.push_back(k);
        }
        // chi(distance-i classes) lies in the row space of Z iff the pivot
        // rows selected by its pivot-position entries sum to it exactly.
        std::vector<Rational> sum(classes);
        for (std::size_t k : rows) {
            for (std::size_t j = 0; j < classes; ++j) sum[j] += part.Z(k, j);
        }
        bool match = true;
        for (std::size_t j = 0; j < classes; ++j) {
            if (sum[j] != Rational(in_target[j] ? 1 : 0)) {
                match = false;
                break;
            }
        }
        if (!match) continue;

        Polynomial q;
        for (std::size_t k : rows) q = q + part.polys[k];
        if (!(poly_eval_matrix(q, g.adjacency) == dd.distance_matrices[i])) {
            throw Error("distance_matrix_polynomials: candidate failed evaluation; this is a bug");
        }
        out[i] = std::move(q);
    }
    return out;
}

OrthogonalityReport quotient_polynomial_orthogonality(const Graph& g) {
    const QpDiagnostics diag = is_quotient_polynomial(g);
    if (!diag.value) {
        throw PreconditionError("quotient_polynomial_orthogonality: graph is not quotient-polynomial");
    }
    const WalkPartition part = walk_partition(g);
    std::vector<RationalMatrix> evaluated;
    evaluated.reserve(part.polys.size());
    for (const Polynomial& p : part.polys) {
        evaluated.push_back(poly_eval_matrix(p, g.adjacency));
    }

    OrthogonalityReport report;
    report.all_orthogonal = true;
    for (std::size_t i = 0; i < evaluated.size(); ++i) {
        for (std::size_t j = i + 1; j < evaluated.size(); ++j) {
            ++report.pairs_checked;
            if (trace_inner(evaluated[i], evaluated[j], g.n) != 0) report.all_orthogonal = false;
        }
    }
    RationalMatrix total(g.n, g.n);
    for (const RationalMatrix& m : evaluated) total = total + m;
    report.sum_is_all_ones = total == RationalMatrix::ones(g.n, g.n);
    return report;
}

}  // namespace adjalg
