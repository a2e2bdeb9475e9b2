#pragma once

#include <array>
#include <cstdint>

namespace bslope {

// Permutation of the vertex set {0,1,2,3} of a tetrahedron.
struct Perm4 {
  std::array<uint8_t, 4> img{0, 1, 2, 3};

  constexpr Perm4() = default;
  constexpr Perm4(int a, int b, int c, int d)
      : img{uint8_t(a), uint8_t(b), uint8_t(c), uint8_t(d)} {}

  constexpr int operator[](int v) const { return img[v]; }

  constexpr Perm4 inverse() const {
    Perm4 q;
    for (int i = 0; i < 4; i++) q.img[img[i]] = uint8_t(i);
    return q;
  }

  // this after other: (*this * other)[v] = (*this)[other[v]]
  constexpr Perm4 operator*(const Perm4& other) const {
    Perm4 q;
    for (int i = 0; i < 4; i++) q.img[i] = img[other.img[i]];
    return q;
  }

  constexpr bool is_identity() const {
    return img[0] == 0 && img[1] == 1 && img[2] == 2 && img[3] == 3;
  }

  friend constexpr bool operator==(const Perm4&, const Perm4&) = default;
};

// Face slots in table order 012, 013, 023, 123.
inline constexpr std::array<std::array<int, 3>, 4> kFaceVertices{
    {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

// Tetrahedron edges in scan order 01, 02, 03, 12, 13, 23.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Edge slot from an unordered vertex pair.
constexpr int edge_index(int u, int v) {
  if (u > v) { int t = u; u = v; v = t; }
  for (int e = 0; e < 6; e++)
    if (kEdgeVertices[e][0] == u && kEdgeVertices[e][1] == v) return e;
  return -1;
}

// Face slot whose vertex set is {a,b,c}; the slot omitting vertex w is
// 012<->3, 013<->2, 023<->1, 123<->0.
constexpr int face_index_missing(int missing_vertex) {
  return 3 - missing_vertex;
}

constexpr int face_missing_vertex(int face) { return 3 - face; }

}  // namespace bslope
