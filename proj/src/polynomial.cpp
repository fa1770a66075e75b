#include "adjalg/polynomial.hpp"

#include "adjalg/errors.hpp"

namespace adjalg {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(std::size_t degree, const Rational& c) {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

Rational Polynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool unit = (mag == 1);
        if (i == 0) {
            out += adjalg::to_string(mag);
        } else {
            if (!unit) {
                out += adjalg::to_string(mag);
                out += " ";
            }
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> coeffs(std::max(p.coefficients().size(), q.coefficients().size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] = p.coefficient(i) + q.coefficient(i);
    return Polynomial(std::move(coeffs));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> coeffs(std::max(p.coefficients().size(), q.coefficients().size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] = p.coefficient(i) - q.coefficient(i);
    return Polynomial(std::move(coeffs));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> coeffs = p.coefficients();
    for (auto& x : coeffs) x *= c;
    return Polynomial(std::move(coeffs));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial();
    std::vector<Rational> coeffs(p.coefficients().size() + q.coefficients().size() - 1);
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        if (p.coefficients()[i] == 0) continue;
        for (std::size_t j = 0; j < q.coefficients().size(); ++j)
            coeffs[i + j] += p.coefficients()[i] * q.coefficients()[j];
    }
    return Polynomial(std::move(coeffs));
}

RationalMatrix poly_eval_matrix(const Polynomial& p, const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("poly_eval_matrix: matrix must be square");
    const std::size_t n = a.rows();
    RationalMatrix acc(n, n);
    const auto& coeffs = p.coefficients();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = mat_mul(acc, a);
        for (std::size_t k = 0; k < n; ++k) acc(k, k) += coeffs[i];
    }
    return acc;
}

}  // namespace adjalg
