#include "oracles.hpp"

#include <optional>
#include <stdexcept>

namespace oracle {

using adjalg::Graph;
using adjalg::Integer;
using adjalg::Polynomial;
using adjalg::Rational;
using adjalg::RationalMatrix;

Polynomial characteristic_polynomial(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("characteristic_polynomial: not square");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RationalMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = mat_mul(a, m) + c[n - k + 1] * RationalMatrix::identity(n);
        c[n - k] = -mat_mul(a, m).trace() / Rational(static_cast<long>(k));
    }
    return Polynomial(c);
}

namespace {

Polynomial derivative(const Polynomial& p) {
    if (p.degree() < 1) return Polynomial();
    std::vector<Rational> coeffs(static_cast<std::size_t>(p.degree()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        coeffs[i] = Rational(static_cast<long>(i + 1)) * p.coefficient(i + 1);
    }
    return Polynomial(coeffs);
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    const Rational lead = p.coefficient(static_cast<std::size_t>(p.degree()));
    std::vector<Rational> coeffs = p.coefficients();
    for (Rational& coefficient : coeffs) coefficient /= lead;
    return Polynomial(coeffs);
}

Polynomial remainder(Polynomial a, const Polynomial& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
        const Rational factor = a.coefficient(static_cast<std::size_t>(a.degree())) /
                                b.coefficient(static_cast<std::size_t>(b.degree()));
        a = a - factor * (Polynomial::monomial(shift) * b);
    }
    return a;
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = remainder(a, b);
        a = b;
        b = r;
    }
    return monic(a);
}

}  // namespace

std::size_t distinct_root_count(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("distinct_root_count: zero polynomial");
    const Polynomial g = gcd(p, derivative(p));
    return static_cast<std::size_t>(p.degree() - g.degree());
}

std::size_t distinct_eigenvalue_count(const RationalMatrix& a) {
    return distinct_root_count(characteristic_polynomial(a));
}

bool definitional_drg(const Graph& g, std::vector<std::size_t>* b_out,
                      std::vector<std::size_t>* c_out) {
    if (!adjalg::is_connected(g)) return false;
    const adjalg::DistanceData dd = adjalg::distance_data(g);
    const std::size_t diam = dd.diameter;
    std::vector<std::optional<std::size_t>> b(diam + 1);
    std::vector<std::optional<std::size_t>> c(diam + 1);
    for (std::size_t x = 0; x < g.n; ++x) {
        for (std::size_t z = 0; z < g.n; ++z) {
            const int i = dd.dist[x][z];
            std::size_t further = 0;
            std::size_t closer = 0;
            for (std::size_t w : g.neighbors[z]) {
                if (dd.dist[x][w] == i + 1) ++further;
                if (dd.dist[x][w] == i - 1) ++closer;
            }
            const std::size_t idx = static_cast<std::size_t>(i);
            if (!b[idx]) b[idx] = further;
            if (!c[idx]) c[idx] = closer;
            if (*b[idx] != further || *c[idx] != closer) return false;
        }
    }
    if (b_out != nullptr) {
        b_out->clear();
        for (std::size_t i = 0; i < diam; ++i) b_out->push_back(*b[i]);
    }
    if (c_out != nullptr) {
        c_out->clear();
        for (std::size_t i = 1; i <= diam; ++i) c_out->push_back(*c[i]);
    }
    return true;
}

std::size_t krylov_dimension(const RationalMatrix& a) {
    const std::vector<RationalMatrix> powers = adjalg::matrix_powers(a, a.rows());
    return adjalg::rref_with_transform(adjalg::stack_vectorized(powers)).rank;
}

Integer brute_walk_count(const Graph& g, std::size_t from, std::size_t to, std::size_t length) {
    std::vector<Integer> ways(g.n, 0);
    ways[from] = 1;
    for (std::size_t step = 0; step < length; ++step) {
        std::vector<Integer> next(g.n, 0);
        for (std::size_t v = 0; v < g.n; ++v) {
            if (ways[v] == 0) continue;
            for (std::size_t w : g.neighbors[v]) next[w] += ways[v];
        }
        ways = std::move(next);
    }
    return ways[to];
}

}  // namespace oracle
