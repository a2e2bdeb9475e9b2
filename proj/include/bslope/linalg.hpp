#pragma once

#include <optional>

#include "bslope/matrix.hpp"

namespace bslope {

// Exact determinant by fraction-free (Bareiss) elimination. Every
// intermediate value is a minor of the input, so no rounding and no
// hidden growth beyond the Hadamard bound. Works for any T with exact
// ring arithmetic; the empty 0x0 matrix has determinant 1.
template <typename T>
T bareiss_det(Mat<T> m);

// Public entry point on arbitrary-precision input.
BigInt exact_det(const Mat<BigInt>& m);

// log2 of the Hadamard bound on any minor of m (row-norm product).
double hadamard_log2(const Mat<int64_t>& m);

// Like hadamard_log2, but over the worst-case column a degeneration index
// could select: per tet, max(|r'|, |r''|, |r'+r''|). Input is the
// (n-1) x 2n exponent matrix.
double hadamard_log2_worst_index(const Mat<int64_t>& exponent_rows);

// Kernel of an (n-1) x n matrix of rank n-1: an integer vector x with
// m x = 0, unique up to scale. Returns nullopt when rank < n-1. The
// returned vector is exact but not normalized.
template <typename T>
std::optional<std::vector<T>> kernel_vector(const Mat<T>& m);

// Classification used by the search hot path.
enum class KernelClass { RankDeficient, ZeroEntry, Mixed, Definite };

// Same computation as kernel_vector on a column-major workspace; avoids
// allocation in the enumeration loop. mat is column-major (cols x rows),
// overwritten in place.
KernelClass kernel_sign_class(int64_t* colmajor, int rows, int cols,
                              int64_t* kv_out);

}  // namespace bslope
