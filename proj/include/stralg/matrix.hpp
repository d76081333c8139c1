#pragma once

#include <vector>

#include "stralg/rational.hpp"

namespace stralg {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major; Mat may be empty or have 0 columns

Mat make_matrix(int rows, int cols);
Mat identity_matrix(int n);
Mat mat_mul(const Mat& a, const Mat& b);
bool mat_is_zero(const Mat& m);
bool mat_equal(const Mat& a, const Mat& b);

// Rank by exact Gaussian elimination (takes a copy).
int mat_rank(Mat m);

// Basis of { x : m x = 0 }, one solution per row. cols = number of unknowns.
std::vector<Vec> nullspace_basis(const Mat& m, int cols);

// Determinant of a square matrix; exact.
Rat mat_det(Mat m);

bool mat_invertible(const Mat& m);

}  // namespace stralg
