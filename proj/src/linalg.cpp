#include "dp4/linalg.hpp"

#include <algorithm>

namespace dp4 {

QMat QMat::identity(size_t n) {
    QMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::transpose() const {
    QMat t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMat QMat::operator*(const QMat& o) const {
    if (c_ != o.r_) throw std::domain_error("matrix product shape mismatch");
    QMat m(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const Rat& x = at(i, k);
            if (sign(x) == 0) continue;
            for (size_t j = 0; j < o.c_; ++j) m.at(i, j) += x * o.at(k, j);
        }
    return m;
}

QMat QMat::operator+(const QMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::domain_error("matrix sum shape mismatch");
    QMat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

QMat QMat::operator-(const QMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::domain_error("matrix diff shape mismatch");
    QMat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

QMat QMat::scaled(const Rat& s) const {
    QMat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

bool QMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return sign(x) == 0; });
}

bool QMat::is_symmetric() const {
    if (r_ != c_) return false;
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = i + 1; j < c_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool QMat::is_diagonal() const {
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j)
            if (i != j && sign(at(i, j)) != 0) return false;
    return true;
}

// row echelon; returns rank, records pivot columns
static size_t echelon(QMat& m, std::vector<size_t>* pivot_cols) {
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && sign(m.at(piv, c)) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rat inv = Rat(1) / m.at(r, c);
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sign(m.at(i, c)) == 0) continue;
            Rat f = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

size_t QMat::rank() const {
    QMat m(*this);
    return echelon(m, nullptr);
}

Rat QMat::det() const {
    if (r_ != c_) throw std::domain_error("det of non-square matrix");
    QMat m(*this);
    Rat d(1);
    for (size_t c = 0; c < c_; ++c) {
        size_t piv = c;
        while (piv < r_ && sign(m.at(piv, c)) == 0) ++piv;
        if (piv == r_) return Rat(0);
        if (piv != c) {
            for (size_t j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Rat inv = Rat(1) / m.at(c, c);
        for (size_t i = c + 1; i < r_; ++i) {
            if (sign(m.at(i, c)) == 0) continue;
            Rat f = m.at(i, c) * inv;
            for (size_t j = c; j < c_; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

QMat QMat::kernel() const {
    QMat m(*this);
    std::vector<size_t> pivots;
    echelon(m, &pivots);
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < c_; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);
    QMat k(c_, free_cols.size());
    for (size_t v = 0; v < free_cols.size(); ++v) {
        size_t fc = free_cols[v];
        k.at(fc, v) = 1;
        for (size_t i = 0; i < pivots.size(); ++i) k.at(pivots[i], v) = -m.at(i, fc);
    }
    return k;
}

std::vector<Rat> mat_vec(const QMat& m, const std::vector<Rat>& v) {
    if (v.size() != m.cols()) throw std::domain_error("mat_vec shape mismatch");
    std::vector<Rat> out(m.rows(), Rat(0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v) {
    Int l = 1;
    for (auto& x : v) l = lcm(l, den(x));
    std::vector<Int> w;
    w.reserve(v.size());
    Int g = 0;
    for (auto& x : v) {
        w.push_back(Int(num(x) * (l / den(x))));
        g = gcd(g, w.back());
    }
    if (sign(g) == 0) return w;  // zero vector
    int s = 0;
    for (auto& x : w)
        if (sign(x) != 0) {
            s = sign(x);
            break;
        }
    if (s < 0) g = -g;
    for (auto& x : w) x /= g;
    return w;
}

}  // namespace dp4
