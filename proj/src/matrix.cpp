#include "adjalg/matrix.hpp"

#include <string>

#include "adjalg/errors.hpp"

namespace adjalg {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::ones(std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (auto& x : m.data_) x = 1;
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool RationalMatrix::is_binary() const {
    for (const auto& x : data_)
        if (!is_binary_value(x)) return false;
    return true;
}

bool RationalMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool RationalMatrix::is_integer() const {
    for (const auto& x : data_)
        if (!is_integer_value(x)) return false;
    return true;
}

Rational RationalMatrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
}

Rational RationalMatrix::entry_sum() const {
    Rational t = 0;
    for (const auto& x : data_) t += x;
    return t;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

RationalMatrix RationalMatrix::vectorize_row_major() const {
    RationalMatrix v(1, rows_ * cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) v(0, k) = data_[k];
    return v;
}

namespace {

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) +
                             "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                             "x" + std::to_string(b.cols()));
}

}  // namespace

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                             "x" + std::to_string(b.cols()));
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b(k, j);
                if (bkj != 0) c(i, j) += aik * bkj;
            }
        }
    return c;
}

RationalMatrix hadamard(const RationalMatrix& a, const RationalMatrix& b) {
    require_same_shape(a, b, "hadamard");
    RationalMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * b(i, j);
    return c;
}

Rational trace_inner(const RationalMatrix& a, const RationalMatrix& b, std::size_t n) {
    if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n)
        throw DimensionError("trace_inner: inputs must both be " + std::to_string(n) + "x" +
                             std::to_string(n));
    Rational t = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& x = a(i, k);
            if (x != 0) t += x * b(k, i);
        }
    return t / Rational(n);
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    require_same_shape(a, b, "operator+");
    RationalMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    require_same_shape(a, b, "operator-");
    RationalMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    return mat_mul(a, b);
}

RationalMatrix operator*(const Rational& c, const RationalMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = c * m(i, j);
    return r;
}

RrefResult rref_with_transform(const RationalMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    RationalMatrix R = m;
    RationalMatrix T = RationalMatrix::identity(rows);
    std::vector<std::size_t> pivots;

    auto scale_row = [&](RationalMatrix& mat, std::size_t i, const Rational& c) {
        for (std::size_t j = 0; j < mat.cols(); ++j) mat(i, j) *= c;
    };
    auto add_row = [&](RationalMatrix& mat, std::size_t dst, std::size_t src, const Rational& c) {
        for (std::size_t j = 0; j < mat.cols(); ++j) mat(dst, j) += c * mat(src, j);
    };
    auto swap_rows = [&](RationalMatrix& mat, std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < mat.cols(); ++j) std::swap(mat(i, j), mat(k, j));
    };

    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot_row = rows;
        for (std::size_t i = row; i < rows; ++i) {
            if (R(i, col) != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row == rows) continue;
        if (pivot_row != row) {
            swap_rows(R, row, pivot_row);
            swap_rows(T, row, pivot_row);
        }
        Rational inv = Rational(1) / R(row, col);
        scale_row(R, row, inv);
        scale_row(T, row, inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row) continue;
            if (R(i, col) == 0) continue;
            Rational f = -R(i, col);
            add_row(R, i, row, f);
            add_row(T, i, row, f);
        }
        pivots.push_back(col);
        ++row;
    }

    return RrefResult{std::move(R), std::move(T), pivots.size(), std::move(pivots)};
}

std::vector<RationalMatrix> matrix_powers(const RationalMatrix& a, std::size_t top) {
    if (a.rows() != a.cols()) throw DimensionError("matrix_powers: matrix must be square");
    std::vector<RationalMatrix> powers;
    powers.reserve(top + 1);
    powers.push_back(RationalMatrix::identity(a.rows()));
    for (std::size_t i = 1; i <= top; ++i) powers.push_back(mat_mul(powers.back(), a));
    return powers;
}

RationalMatrix stack_vectorized(const std::vector<RationalMatrix>& mats) {
    if (mats.empty()) return RationalMatrix();
    const std::size_t width = mats.front().rows() * mats.front().cols();
    RationalMatrix out(mats.size(), width);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (mats[i].rows() * mats[i].cols() != width)
            throw DimensionError("stack_vectorized: inconsistent shapes");
        for (std::size_t k = 0; k < width; ++k) out(i, k) = mats[i].data()[k];
    }
    return out;
}

std::vector<Rational> rowspace_coefficients(const RrefResult& rref, const RationalMatrix& v,
                                            bool* inside) {
    if (v.rows() != 1 || v.cols() != rref.R.cols())
        throw DimensionError("rowspace_coefficients: v must be 1x" +
                             std::to_string(rref.R.cols()));
    std::vector<Rational> coeffs(rref.rank);
    RationalMatrix residual = v;
    for (std::size_t i = 0; i < rref.rank; ++i) {
        coeffs[i] = v(0, rref.pivots[i]);
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < residual.cols(); ++j)
            residual(0, j) -= coeffs[i] * rref.R(i, j);
    }
    *inside = residual.is_zero();
    return coeffs;
}

}  // namespace adjalg
