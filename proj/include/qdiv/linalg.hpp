#pragma once

// Small dense exact linear algebra over Q: just enough Gaussian elimination
// to solve the nucleus/center systems and take 4x4 determinants. Pivots are
// chosen as the first nonzero entry, which is deterministic and loses
// nothing in exact arithmetic.

#include <cstddef>
#include <vector>

#include "qdiv/arith.hpp"

namespace qdiv::linalg {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

Mat zeros(std::size_t rows, std::size_t cols);
Mat identity(std::size_t n);
Mat mul(const Mat& a, const Mat& b);
Vec apply(const Mat& m, const Vec& v);

// Reduced row echelon form in place; returns the rank.
std::size_t rref(Mat& m);

// Basis of the right kernel {x : m x = 0}, one vector per free column, in
// column order. Deterministic.
std::vector<Vec> nullspace(Mat m);

Rational det(Mat m);

}  // namespace qdiv::linalg
