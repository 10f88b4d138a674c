#pragma once

#include <vector>

#include "dp4/rat.hpp"

namespace dp4 {

/// Dense matrix over Q with exact arithmetic.
class QMat {
public:
    QMat() : r_(0), c_(0) {}
    QMat(size_t r, size_t c) : r_(r), c_(c), a_(r * c, Rat(0)) {}
    static QMat identity(size_t n);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Rat& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Rat& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

    QMat transpose() const;
    QMat operator*(const QMat& o) const;
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat scaled(const Rat& s) const;
    bool operator==(const QMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    bool is_zero() const;
    bool is_symmetric() const;
    bool is_diagonal() const;

    size_t rank() const;
    Rat det() const;  // square only
    /// Basis of the right kernel, as columns of the returned matrix.
    QMat kernel() const;

private:
    size_t r_, c_;
    std::vector<Rat> a_;
};

/// Multiply a matrix by a column vector.
std::vector<Rat> mat_vec(const QMat& m, const std::vector<Rat>& v);

/// Scale a rational vector to coprime integers (exact), preserving direction;
/// sign fixed so the first nonzero entry is positive.
std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v);

}  // namespace dp4
