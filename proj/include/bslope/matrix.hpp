#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bslope {

using BigInt = boost::multiprecision::cpp_int;

// Dense row-major matrix. Entries are exact integers throughout the
// project; T is int64_t on fast paths and BigInt when minors may be large.
template <typename T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

  T& operator()(int r, int c) { return a[size_t(r) * cols + c]; }
  const T& operator()(int r, int c) const { return a[size_t(r) * cols + c]; }

  friend bool operator==(const Mat&, const Mat&) = default;
};

template <typename To, typename From>
Mat<To> mat_cast(const Mat<From>& m) {
  Mat<To> out(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); i++) out.a[i] = To(m.a[i]);
  return out;
}

}  // namespace bslope
