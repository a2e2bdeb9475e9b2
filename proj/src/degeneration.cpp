#include "bslope/degeneration.hpp"

#include <boost/integer/common_factor.hpp>

namespace bslope {

DegenerationIndex parse_index(std::string_view text) {
  DegenerationIndex idx;
  idx.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '0': idx.push_back(IndexValue::Zero); break;
      case '1': idx.push_back(IndexValue::One); break;
      case 'i': case 'I': idx.push_back(IndexValue::Inf); break;
      default:
        throw ParseError(std::string("bad index character '") + c +
                         "' (expected 0, 1 or i)");
    }
  }
  return idx;
}

std::string index_to_string(const DegenerationIndex& idx) {
  std::string s;
  s.reserve(idx.size());
  for (IndexValue v : idx) s += "01i"[int(v)];
  return s;
}

Mat<int64_t> degeneration_matrix(const ExponentMatrix& R,
                                 const DegenerationIndex& idx) {
  if (int(idx.size()) != R.tets)
    throw std::invalid_argument("degeneration index length " +
                                std::to_string(idx.size()) +
                                " != tetrahedron count " + std::to_string(R.tets));
  Mat<int64_t> out(R.rows.rows, R.tets);
  for (int i = 0; i < out.rows; i++) {
    for (int k = 0; k < R.tets; k++) {
      int64_t rp = R.rows(i, 2 * k), rpp = R.rows(i, 2 * k + 1);
      switch (idx[k]) {
        case IndexValue::Zero: out(i, k) = rp; break;
        case IndexValue::One: out(i, k) = rpp; break;
        case IndexValue::Inf: out(i, k) = -rp - rpp; break;
      }
    }
  }
  return out;
}

namespace {

template <typename T>
std::vector<T> column_deleted_minors(const Mat<T>& RI) {
  const int n = RI.cols;
  std::vector<T> d(n);
  Mat<T> sub(RI.rows, n - 1);
  for (int k = 0; k < n; k++) {
    for (int i = 0; i < RI.rows; i++) {
      int cc = 0;
      for (int c = 0; c < n; c++) {
        if (c == k) continue;
        sub(i, cc++) = RI(i, c);
      }
    }
    T det = bareiss_det<T>(sub);
    d[k] = (k & 1) ? T(-det) : det;
  }
  return d;
}

}  // namespace

DegenerationVector degeneration_vector(const Mat<int64_t>& RI) {
  if (RI.cols != RI.rows + 1)
    throw std::invalid_argument("degeneration_vector: expected (n-1) x n input");

  DegenerationVector dv;
  // Bareiss intermediates are minors; the update numerator multiplies two of
  // them, so int64 is safe while the Hadamard bound stays below ~2^30
  if (hadamard_log2(RI) < 30.0) {
    std::vector<int64_t> d = column_deleted_minors<int64_t>(RI);
    dv.d.assign(d.begin(), d.end());
  } else {
    dv.d = column_deleted_minors<BigInt>(mat_cast<BigInt>(RI));
  }

  BigInt g = 0;
  for (const BigInt& x : dv.d) g = boost::integer::gcd(g, abs(x));
  dv.content = g;
  dv.primitive = dv.d;
  if (g > 1)
    for (BigInt& x : dv.primitive) x /= g;
  return dv;
}

bool is_ideal_point(const DegenerationVector& dv) {
  if (dv.d.empty()) return false;
  bool pos = true, neg = true;
  for (const BigInt& x : dv.d) {
    if (x <= 0) pos = false;
    if (x >= 0) neg = false;
  }
  return pos || neg;
}

}  // namespace bslope
