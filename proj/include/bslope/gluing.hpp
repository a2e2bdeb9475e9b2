#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "bslope/matrix.hpp"
#include "bslope/triangulation.hpp"

namespace bslope {

struct SelectorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape parameter carried by a tetrahedron edge: z on 01/23, z' = 1/(1-z)
// on 02/13, z'' = 1 - 1/z on 03/12.
enum class ShapeParam { Z, ZPrime, ZDoublePrime };

ShapeParam edge_parameter(int edge_slot);

// Per (edge class, tetrahedron) counts of z / z' / z'' edges.
struct EdgeExponentCounts {
  int classes = 0;
  int tets = 0;
  std::vector<std::array<int, 3>> counts;  // row-major classes x tets

  const std::array<int, 3>& at(int cls, int tet) const {
    return counts[size_t(cls) * tets + tet];
  }
};

// Full gluing-equation exponent system: one row per edge class, columns
// interleaved (r'_1, r''_1, ..., r'_n, r''_n) with r' = p - p'' and
// r'' = p'' - p'. Column sums are zero.
struct FullExponentMatrix {
  Mat<int64_t> mat;
  std::vector<int> sign_parity;  // total p'' mod 2 per class
};

EdgeExponentCounts count_exponents(const Triangulation& tri,
                                   const std::vector<EdgeClass>& classes);
FullExponentMatrix exponent_rows(const Triangulation& tri,
                                 const std::vector<EdgeClass>& classes);

// Selects the redundant equation to drop: by class id, or by content (a
// (tet, edge) member that must lie in the omitted class).
struct OmitSelector {
  std::variant<int, std::pair<int, int>> sel;

  static OmitSelector by_id(int id) { return {id}; }
  static OmitSelector by_member(int tet, int edge) { return {std::pair{tet, edge}}; }
  // "7" or "tet:pair" as in "--omit-edge 2:03"
  static OmitSelector parse(std::string_view text);
};

struct ExponentMatrix {
  Mat<int64_t> rows;  // (classes-1) x 2n, in class order with one row removed
  int tets = 0;
  int omitted_class = -1;
  std::pair<int, int> omitted_member{-1, -1};  // first member of the omitted class
  std::vector<int> row_class;                  // class id per kept row
  std::vector<int> sign_parity;                // per kept row
};

ExponentMatrix build_R(const Triangulation& tri,
                       const std::vector<EdgeClass>& classes,
                       const OmitSelector& omit);

// Dump format: header comment then one row of 2n integers per line.
std::string dump_matrix(const ExponentMatrix& R);

}  // namespace bslope
