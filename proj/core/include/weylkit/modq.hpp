#pragma once

#include <vector>

namespace weylkit::modq {

// Dense row-major matrices over the prime field F_q. Vectors are rows and
// linear maps act by right multiplication: v -> v * m.

using Row = std::vector<int>;
using Mat = std::vector<Row>;

bool is_prime(int q);
int inv(int a, int q);

Mat identity(int n);
Mat multiply(const Mat& a, const Mat& b, int q);
Row apply(const Row& v, const Mat& m, int q);

/// Reduced row echelon form with zero rows dropped; the canonical
/// representation of a row space.
Mat rref(Mat m, int q);
int rank(Mat m, int q);
Mat stack(const Mat& a, const Mat& b);
/// Basis of the intersection of two row spaces (Zassenhaus).
Mat intersect_row_spaces(const Mat& a, const Mat& b, int cols, int q);
bool is_invertible(const Mat& m, int q);

/// All q^n vectors of length n, the zero vector included.
std::vector<Row> all_vectors(int n, int q);
/// Every invertible n x n matrix over F_q by brute force; capped at
/// q^(n^2) <= 2^21 candidates.
std::vector<Mat> invertible_matrices(int n, int q);
/// Transvections plus one primitive-root scaling: a generating set of GL_n(F_q).
std::vector<Mat> gl_generators(int n, int q);

}  // namespace weylkit::modq
