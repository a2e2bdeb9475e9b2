#pragma once

#include "bslope/search.hpp"

namespace bslope {

struct FamilyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The two layered-solid-torus knot families. K_n (n odd, from K_5) grows by
// re-aiming the folded last tetrahedron at a new one; J_n (n even, from J_2)
// first opens the hexagon between tets 6 and 10, then chains folds.
enum class Family { K, J };

// K_{n+2} from K_n. Requires the K-fold on the last tetrahedron
// (face 012 -> self(320), face 023 -> self(210)).
Triangulation extend_K(const Triangulation& tri);

// J_{n+2} from J_n. Accepts either the J_2 base (tet 6 face 023 glued to
// tet 10 face 012) or a J-folded last tetrahedron
// (face 023 -> self(231), face 123 -> self(302)).
Triangulation extend_J(const Triangulation& tri);

// Zero-pad both curves for the added tetrahedron; family K additionally
// replaces the longitude by longitude - 4 * meridian.
void extend_peripherals(Family family, PeripheralCurve& meridian,
                        PeripheralCurve& longitude);

// after == before bordered by the row (0,...,0,1,-2) at the bottom and the
// column (0,...,0,1,-2)^T at the right.
bool check_structural_lemma(const Mat<int64_t>& before, const Mat<int64_t>& after);

// d_{n+4} = -2 (d_{n+2},0) - (d_n,0,0) + sign * (0,...,0,2) with
// sign = (-1)^{(n+3)/2} for K and (-1)^{(n+4)/2} for J.
bool check_recurrence(const std::vector<BigInt>& d_n,
                      const std::vector<BigInt>& d_n2,
                      const std::vector<BigInt>& d_n4, Family family, int n);

// Predicted degeneration vectors: K index 1..3 for odd n >= 5, J index 1..2
// for even n >= 6. Layout follows the propositions' tetrahedron order (for
// J that labeling differs from the gluing tables; see kJ2DataLabeling).
std::vector<BigInt> closed_form_vector(Family family, int index_id, int n);

// Tet relabeling between the J gluing tables and the labeling the J index
// lists, peripheral curves and closed forms are written in: data position v
// describes table tet kJ2DataLabeling[v]. Identity beyond tet 17.
extern const std::array<int, 18> kJ2DataLabeling;

// Map a vector in data labeling to table labeling (or back with invert).
std::vector<BigInt> apply_j2_labeling(const std::vector<BigInt>& data_order,
                                      bool invert = false);

struct FamilyOptions {
  Family family;
  int max_n = 0;
  Triangulation base;
  CurvePair curves;
  std::vector<DegenerationIndex> indices;
  OmitSelector omit;
};

struct FamilyMemberReport {
  int n = 0;
  int tets = 0;
  std::vector<SlopeResult> results;  // one per base index list
  bool lemma_ok = true;              // bordering vs the previous member
  bool recurrence_ok = true;         // vs the two previous members
  bool closed_form_ok = true;        // where the closed forms apply
};

// n for a member triangulation: K has (n+25)/2 tets, J has (n+34)/2.
int family_parameter(Family family, int tets);

std::vector<FamilyMemberReport> run_family(const FamilyOptions& opts);

json family_report_to_json(const std::vector<FamilyMemberReport>& reports);

}  // namespace bslope
