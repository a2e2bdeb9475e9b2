#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "bslope/degeneration.hpp"

namespace bslope {

// Exponent vector of a cusp curve in interleaved order
// (x'_1, x''_1, ..., x'_n, x''_n): z exponent then w exponent per tet.
struct PeripheralCurve {
  std::string name;
  std::vector<int64_t> coeffs;
};

struct CurvePair {
  PeripheralCurve meridian;
  PeripheralCurve longitude;
};

// Two-line file: "meridian: i1 ... i2n" / "longitude: ...".
CurvePair parse_curves(std::string_view text);
std::string serialize_curves(const CurvePair& curves);

// Reduced fraction with positive denominator; the infinite slope is 1/0.
struct Slope {
  BigInt num = 0;
  BigInt den = 1;

  bool is_infinite() const { return den == 0; }
  std::string str() const;
  friend bool operator==(const Slope&, const Slope&) = default;
  friend bool operator<(const Slope& a, const Slope& b) {
    if (a.den == 0 || b.den == 0) return b.den == 0 && a.den != 0;
    return a.num * b.den < b.num * a.den;
  }
};

// Per-tetrahedron blow-up directions: rho_1 = (1,0), rho_0 = (0,-1),
// rho_inf = (-1,1), scaled by the primitive degeneration entries. The
// entries keep their sign; negating d negates the whole vector (and both
// valuations) without changing the slope.
std::vector<BigInt> direction_vector(const DegenerationIndex& idx,
                                     const std::vector<BigInt>& primitive);

// x ^ y = sum x'_k y''_k - x''_k y'_k over tetrahedra.
BigInt wedge(const std::vector<BigInt>& x, const std::vector<BigInt>& y);
BigInt wedge(const std::vector<int64_t>& x, const std::vector<BigInt>& y);

struct Valuations {
  BigInt v_mu;
  BigInt v_lambda;
};

// Only defined at a certified ideal point; throws otherwise.
Valuations valuations(const PeripheralCurve& meridian,
                      const PeripheralCurve& longitude,
                      const DegenerationIndex& idx, const DegenerationVector& dv);

// -v_lambda / v_mu reduced; throws when both vanish.
Slope boundary_slope(const BigInt& v_mu, const BigInt& v_lambda);

struct SlopeResult {
  DegenerationIndex index;
  std::vector<BigInt> d;
  BigInt content;
  BigInt v_mu;
  BigInt v_lambda;
  // empty when both valuations vanish (ideal point certified, no slope)
  std::optional<Slope> slope;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

}  // namespace bslope
