#include "bslope/peripheral.hpp"

#include <boost/integer/common_factor.hpp>
#include <ostream>
#include <sstream>

namespace bslope {

namespace {

PeripheralCurve parse_curve_line(const std::string& line, const char* expect) {
  std::istringstream ls(line);
  std::string head;
  ls >> head;
  if (head != std::string(expect) + ":")
    throw ParseError("curve file: expected \"" + std::string(expect) +
                     ":\" line, got \"" + head + "\"");
  PeripheralCurve c;
  c.name = expect;
  int64_t v;
  while (ls >> v) c.coeffs.push_back(v);
  if (c.coeffs.empty() || c.coeffs.size() % 2 != 0)
    throw ParseError("curve file: " + c.name + " needs an even, positive number "
                     "of entries (got " + std::to_string(c.coeffs.size()) + ")");
  return c;
}

}  // namespace

CurvePair parse_curves(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    lines.push_back(line);
  }
  if (lines.size() != 2)
    throw ParseError("curve file: expected exactly 2 curve lines, got " +
                     std::to_string(lines.size()));
  CurvePair cp{parse_curve_line(lines[0], "meridian"),
               parse_curve_line(lines[1], "longitude")};
  if (cp.meridian.coeffs.size() != cp.longitude.coeffs.size())
    throw ParseError("curve file: meridian and longitude lengths differ");
  return cp;
}

std::string serialize_curves(const CurvePair& curves) {
  std::ostringstream os;
  for (const PeripheralCurve* c : {&curves.meridian, &curves.longitude}) {
    os << c->name << ":";
    for (int64_t v : c->coeffs) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

std::string Slope::str() const {
  std::ostringstream os;
  os << num << '/' << den;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Slope& s) {
  return os << s.num << '/' << s.den;
}

std::vector<BigInt> direction_vector(const DegenerationIndex& idx,
                                     const std::vector<BigInt>& primitive) {
  if (idx.size() != primitive.size())
    throw std::invalid_argument("direction_vector: length mismatch");
  std::vector<BigInt> y(2 * idx.size());
  for (size_t k = 0; k < idx.size(); k++) {
    const BigInt& s = primitive[k];
    switch (idx[k]) {
      case IndexValue::One:  y[2 * k] = s;  y[2 * k + 1] = 0;  break;
      case IndexValue::Zero: y[2 * k] = 0;  y[2 * k + 1] = -s; break;
      case IndexValue::Inf:  y[2 * k] = -s; y[2 * k + 1] = s;  break;
    }
  }
  return y;
}

template <typename T>
static BigInt wedge_impl(const std::vector<T>& x, const std::vector<BigInt>& y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw std::invalid_argument("wedge: length mismatch");
  BigInt s = 0;
  for (size_t k = 0; k < x.size(); k += 2)
    s += x[k] * y[k + 1] - x[k + 1] * y[k];
  return s;
}

BigInt wedge(const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
  return wedge_impl(x, y);
}
BigInt wedge(const std::vector<int64_t>& x, const std::vector<BigInt>& y) {
  return wedge_impl(x, y);
}

Valuations valuations(const PeripheralCurve& meridian,
                      const PeripheralCurve& longitude,
                      const DegenerationIndex& idx, const DegenerationVector& dv) {
  if (!is_ideal_point(dv))
    throw std::invalid_argument(
        "valuations: degeneration vector is not sign-definite, no ideal point "
        "backs the formula");
  if (meridian.coeffs.size() != 2 * idx.size())
    throw std::invalid_argument("valuations: curve length != 2 x index length");
  std::vector<BigInt> y = direction_vector(idx, dv.primitive);
  return Valuations{wedge(meridian.coeffs, y), wedge(longitude.coeffs, y)};
}

Slope boundary_slope(const BigInt& v_mu, const BigInt& v_lambda) {
  if (v_mu == 0 && v_lambda == 0)
    throw std::invalid_argument(
        "boundary_slope: both valuations vanish, no slope certified at this "
        "ideal point");
  if (v_mu == 0) return Slope{1, 0};
  BigInt num = -v_lambda, den = v_mu;
  if (den < 0) { num = -num; den = -den; }
  BigInt g = boost::integer::gcd(abs(num), den);
  if (g > 1) { num /= g; den /= g; }
  return Slope{num, den};
}

}  // namespace bslope
