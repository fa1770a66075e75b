#include <doctest.h>

#include "adjalg/polynomial.hpp"

using adjalg::Polynomial;
using adjalg::Rational;
using adjalg::RationalMatrix;

TEST_CASE("construction trims trailing zeros") {
    const Polynomial p(std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    CHECK(p == Polynomial::constant(Rational(1)));

    const Polynomial zero(std::vector<Rational>{Rational(0), Rational(0)});
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero == Polynomial());
}

TEST_CASE("coefficient access past the degree") {
    const Polynomial p = Polynomial::monomial(2, Rational(3));
    CHECK(p.coefficient(2) == Rational(3));
    CHECK(p.coefficient(1) == Rational(0));
    CHECK(p.coefficient(7) == Rational(0));
}

TEST_CASE("arithmetic") {
    const Polynomial t = Polynomial::monomial(1);
    const Polynomial one = Polynomial::constant(Rational(1));
    CHECK((t + one) * (t - one) == Polynomial::monomial(2) - one);

    const Polynomial sum = t + (Rational(-1) * t);
    CHECK(sum.is_zero());

    const Polynomial p = Rational(1, 2) * Polynomial::monomial(3);
    CHECK(p.coefficient(3) == Rational(1, 2));
}

TEST_CASE("scalar evaluation uses exact arithmetic") {
    // p(t) = t^2 - 5/2 t + 1
    const Polynomial p(std::vector<Rational>{Rational(1), Rational(-5, 2), Rational(1)});
    CHECK(p(Rational(2)) == Rational(0));
    CHECK(p(Rational(1, 2)) == Rational(0));
    CHECK(p(Rational(0)) == Rational(1));
}

TEST_CASE("matrix evaluation") {
    RationalMatrix a(3, 3);
    a(0, 1) = a(1, 0) = a(1, 2) = a(2, 1) = 1;  // path 0-1-2
    const Polynomial p(std::vector<Rational>{Rational(-2), Rational(0), Rational(1)});
    const RationalMatrix value = poly_eval_matrix(p, a);
    CHECK(value == mat_mul(a, a) - 2 * RationalMatrix::identity(3));

    CHECK(poly_eval_matrix(Polynomial(), a) == RationalMatrix(3, 3));
    CHECK(poly_eval_matrix(Polynomial::constant(Rational(4)), a) ==
          4 * RationalMatrix::identity(3));
}

TEST_CASE("rendering") {
    const Polynomial p(std::vector<Rational>{Rational(-1), Rational(0), Rational(5, 8),
                                             Rational(0), Rational(-1, 32)});
    CHECK(p.to_string() == "-1/32 t^4 + 5/8 t^2 - 1");
    CHECK(Polynomial().to_string() == "0");
    CHECK(Polynomial::monomial(1).to_string() == "t");
    const Polynomial q(std::vector<Rational>{Rational(0), Rational(-3, 2), Rational(0),
                                             Rational(1, 8)});
    CHECK(q.to_string() == "1/8 t^3 - 3/2 t");
    CHECK(q.to_string("x") == "1/8 x^3 - 3/2 x");
}
