#pragma once

#include <random>

#include "dp4/pencil.hpp"

namespace dp4::testutil {

/// Deterministic RNG for property tests.
inline std::mt19937_64 rng(uint64_t seed = 0xd1a604a15eedULL) { return std::mt19937_64(seed); }

inline Int rand_int(std::mt19937_64& g, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return Int(d(g));
}

inline Int rand_nonzero(std::mt19937_64& g, long lo, long hi) {
    for (;;) {
        Int v = rand_int(g, lo, hi);
        if (sign(v) != 0) return v;
    }
}

inline Rat rand_rat(std::mt19937_64& g, long hi = 9) {
    std::uniform_int_distribution<long> num(-hi, hi);
    std::uniform_int_distribution<long> den(1, hi);
    Rat r(num(g), den(g));
    r.canonicalize();
    return r;
}

/// Random diagonal pencil, resampled until nonsingular.
inline Pencil random_diagonal_pencil(std::mt19937_64& g, long hi = 6) {
    for (;;) {
        std::vector<Int> a(5), b(5);
        for (int i = 0; i < 5; ++i) {
            a[i] = rand_int(g, -hi, hi);
            b[i] = rand_int(g, -hi, hi);
        }
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i)
            if (sign(a[i]) == 0 && sign(b[i]) == 0) ok = false;
        for (int i = 0; i < 5 && ok; ++i)
            for (int j = i + 1; j < 5 && ok; ++j)
                if (a[i] * b[j] - a[j] * b[i] == 0) ok = false;
        if (!ok) continue;
        QMat g1(5, 5), g2(5, 5);
        for (int i = 0; i < 5; ++i) {
            g1.at(i, i) = Rat(a[i]);
            g2.at(i, i) = Rat(b[i]);
        }
        Pencil p{QuadForm5(g1), QuadForm5(g2)};
        if (is_nonsingular_dp4(p)) return p;
    }
}

/// Random invertible rational matrix with small integer entries.
inline QMat random_invertible(std::mt19937_64& g, size_t n, long hi = 4) {
    for (;;) {
        QMat m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = Rat(rand_int(g, -hi, hi));
        if (sign(m.det()) != 0) return m;
    }
}

}  // namespace dp4::testutil
