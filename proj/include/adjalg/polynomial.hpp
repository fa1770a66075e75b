#pragma once

#include <string>
#include <vector>

#include "adjalg/matrix.hpp"
#include "adjalg/rational.hpp"

namespace adjalg {

// Univariate polynomial with exact rational coefficients, index i
// holding the coefficient of t^i. The zero polynomial is the empty
// coefficient list; no trailing zero is ever stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(std::size_t degree, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    // 0 beyond the degree.
    Rational coefficient(std::size_t i) const;

    Rational operator()(const Rational& x) const;

    // Plain ASCII rendering, highest degree first: "-1/32 t^4 + 5/8 t^2 - 1".
    std::string to_string(const std::string& var = "t") const;

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Rational& c, const Polynomial& p);
Polynomial operator*(const Polynomial& p, const Polynomial& q);

// Horner evaluation of p at a square matrix: exact sum c_i a^i.
// Throws DimensionError unless a is square.
RationalMatrix poly_eval_matrix(const Polynomial& p, const RationalMatrix& a);

}  // namespace adjalg
