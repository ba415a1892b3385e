#pragma once

#include "norton/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace norton {

// Dense matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<Vector>& rows);
    static RationalMatrix from_columns(const std::vector<Vector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    const Vector& data() const { return data_; }

    Vector apply(const Vector& v) const;
    RationalMatrix transpose() const;
    Rational trace() const;
    bool is_zero() const;

    RationalMatrix& operator+=(const RationalMatrix& o);
    RationalMatrix& operator-=(const RationalMatrix& o);
    RationalMatrix& operator*=(const Rational& s);

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector data_;
};

std::size_t rank(const RationalMatrix& m);

// Some exact solution of A x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const RationalMatrix& a, const Vector& b);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/*
 * Row-echelon accumulator over vectors of a fixed length. try_add() reports
 * whether the vector was independent of everything added so far.
 */
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t length) : length_(length) {}

    bool try_add(const Vector& v);
    bool contains(const Vector& v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    Vector reduce(Vector v) const;

    std::size_t length_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace norton
