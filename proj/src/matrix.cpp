#include "norton/matrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace norton {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return {};
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<Vector>& cols) {
    return from_rows(cols).transpose();
}

Vector RationalMatrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector RationalMatrix::column(std::size_t j) const {
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

Vector RationalMatrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational& a = (*this)(i, j);
            if (a != 0 && v[j] != 0) s += a * v[j];
        }
        out[i] = std::move(s);
    }
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Rational RationalMatrix::trace() const {
    Rational s = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
}

bool RationalMatrix::is_zero() const { return norton::is_zero(data_); }

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    Rational tmp;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b(k, j);
                if (bkj == 0) continue;
                tmp = aik * bkj;
                c(i, j) += tmp;
            }
        }
    }
    return c;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns (restricted to the first `pivot_cols` columns).
std::vector<std::size_t> gauss_jordan(RationalMatrix& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(const RationalMatrix& m) {
    RationalMatrix work = m;
    return gauss_jordan(work, work.cols()).size();
}

std::optional<Vector> solve(const RationalMatrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = gauss_jordan(aug, a.cols());
    for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
        if (aug(i, a.cols()) != 0) return std::nullopt;
    Vector x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    if (gauss_jordan(aug, n).size() != n) return std::nullopt;
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

Vector EchelonBasis::reduce(Vector v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (v[p] == 0) continue;
        Rational f = v[p];
        for (std::size_t j = p; j < length_; ++j)
            if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
    }
    return v;
}

bool EchelonBasis::try_add(const Vector& v) {
    if (v.size() != length_) throw std::invalid_argument("EchelonBasis: length mismatch");
    Vector w = reduce(v);
    std::size_t p = 0;
    while (p < length_ && w[p] == 0) ++p;
    if (p == length_) return false;
    Rational inv = 1 / w[p];
    for (std::size_t j = p; j < length_; ++j) w[j] *= inv;
    // keep rows fully reduced against the new pivot so reduce() stays single-pass
    for (auto& row : rows_) {
        if (row[p] == 0) continue;
        Rational f = row[p];
        for (std::size_t j = p; j < length_; ++j)
            if (w[j] != 0) row[j] -= f * w[j];
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
}

bool EchelonBasis::contains(const Vector& v) const {
    if (v.size() != length_) throw std::invalid_argument("EchelonBasis: length mismatch");
    return norton::is_zero(reduce(v));
}

} // namespace norton
