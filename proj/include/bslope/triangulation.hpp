#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bslope/perm.hpp"

namespace bslope {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One face slot: glued to face vertex_map(F) of tetrahedron target_tet.
// vertex_map is the full 4-vertex map; the partner slot stores its inverse.
struct FaceGluing {
  int target_tet = -1;
  Perm4 vertex_map;

  friend bool operator==(const FaceGluing&, const FaceGluing&) = default;
};

struct Tetrahedron {
  std::array<FaceGluing, 4> face;

  friend bool operator==(const Tetrahedron&, const Tetrahedron&) = default;
};

// Ideal triangulation as a closed face-gluing table. Immutable after
// construction; the constructor enforces the pairing invariants.
class Triangulation {
 public:
  explicit Triangulation(std::vector<Tetrahedron> tets);

  int size() const { return int(tets_.size()); }
  const Tetrahedron& tet(int i) const { return tets_[i]; }
  const std::vector<Tetrahedron>& tets() const { return tets_; }

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  std::vector<Tetrahedron> tets_;
};

// An orbit of tetrahedron edges under the face identifications.
struct EdgeClass {
  int id = 0;
  // (tet, edge slot 0..5) in scan order: tets ascending, edges 01,02,03,12,13,23
  std::vector<std::pair<int, int>> members;

  int degree() const { return int(members.size()); }
  bool contains(int tet, int edge) const;
};

Triangulation parse_triangulation(std::string_view text);
std::string serialize(const Triangulation& tri);

// Orbits numbered by first appearance in scan order.
std::vector<EdgeClass> edge_classes(const Triangulation& tri);

// Soft diagnostics (e.g. class count != tetrahedron count). Hard failures
// throw from the Triangulation constructor instead.
std::vector<std::string> validation_warnings(const Triangulation& tri,
                                             const std::vector<EdgeClass>& classes);

// "03" <-> edge slot helpers for selectors and member listings.
std::string edge_pair_name(int edge);
int edge_pair_from_name(std::string_view name);

}  // namespace bslope
