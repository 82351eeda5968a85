#pragma once

#include "mrb/linalg.hpp"

#include <random>

namespace mrb::testing {

inline Scalar small_scalar(std::mt19937_64& rng, int bound = 2) {
    return Scalar(static_cast<long long>(std::uniform_int_distribution<int>(-bound, bound)(rng)));
}

inline DenseMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound = 2) {
    DenseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = small_scalar(rng, bound);
    return m;
}

inline DenseTensor random_tensor(std::mt19937_64& rng, Shape shape, int bound = 2) {
    DenseTensor t(std::move(shape));
    for (auto& x : t.data()) x = small_scalar(rng, bound);
    return t;
}

// Plain row reduction on a dense copy; deliberately independent of EchelonBasis.
inline std::size_t oracle_rank(DenseMatrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            Scalar f = m(i, c) / m(rank, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Unit-lower-triangular times unit-upper-triangular: invertible with small entries.
inline DenseMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    DenseMatrix lower = DenseMatrix::identity(n), upper = DenseMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            lower(i, j) = small_scalar(rng, 1);
            upper(j, i) = small_scalar(rng, 1);
        }
    return lower * upper;
}

} // namespace mrb::testing
