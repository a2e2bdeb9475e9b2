#pragma once

#include <string>
#include <string_view>

#include "bslope/gluing.hpp"
#include "bslope/linalg.hpp"

namespace bslope {

// A degeneration index assigns each tetrahedron the limit its shape
// parameter approaches: 0, 1 or infinity.
enum class IndexValue : uint8_t { Zero = 0, One = 1, Inf = 2 };

using DegenerationIndex = std::vector<IndexValue>;

// Text form uses characters {0,1,i}, one per tetrahedron.
DegenerationIndex parse_index(std::string_view text);
std::string index_to_string(const DegenerationIndex& idx);

// Column k of R(I): the r' column of tet k when i_k = 0, the r'' column
// when i_k = 1, and -(r' + r'') when i_k = infinity.
Mat<int64_t> degeneration_matrix(const ExponentMatrix& R,
                                 const DegenerationIndex& idx);

struct DegenerationVector {
  std::vector<BigInt> d;          // alternating-sign maximal minors
  BigInt content = 0;             // gcd of |d|, 0 only for the zero vector
  std::vector<BigInt> primitive;  // d / content (d itself when d = 0)

  bool is_zero() const { return content == 0; }
};

// d_k = (-1)^(k-1) det of R(I) with column k removed, computed by
// column-deleted fraction-free determinants. Dispatches to int64 when the
// Hadamard bound certifies no overflow, otherwise to BigInt.
DegenerationVector degeneration_vector(const Mat<int64_t>& RI);

// Strictly positive or strictly negative throughout; zero entries and the
// zero vector both disqualify.
bool is_ideal_point(const DegenerationVector& dv);

}  // namespace bslope
