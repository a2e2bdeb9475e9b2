#include "bslope/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace bslope {

template <typename T>
T bareiss_det(Mat<T> m) {
  const int n = m.rows;
  if (n != m.cols) throw std::invalid_argument("bareiss_det: matrix not square");
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; k++) {
    if (m(k, k) == 0) {
      int r = -1;
      for (int i = k + 1; i < n; i++)
        if (m(i, k) != 0) { r = i; break; }
      if (r < 0) return T(0);
      for (int c = k; c < n; c++) std::swap(m(k, c), m(r, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++) {
      for (int j = k + 1; j < n; j++)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return sign < 0 ? T(-det) : det;
}

template int64_t bareiss_det<int64_t>(Mat<int64_t>);
template BigInt bareiss_det<BigInt>(Mat<BigInt>);

BigInt exact_det(const Mat<BigInt>& m) { return bareiss_det<BigInt>(m); }

double hadamard_log2(const Mat<int64_t>& m) {
  double total = 0.0;
  for (int i = 0; i < m.rows; i++) {
    double s = 0.0;
    for (int j = 0; j < m.cols; j++) {
      double v = double(m(i, j));
      s += v * v;
    }
    if (s > 1.0) total += 0.5 * std::log2(s);
  }
  return total;
}

double hadamard_log2_worst_index(const Mat<int64_t>& exponent_rows) {
  double total = 0.0;
  const int n = exponent_rows.cols / 2;
  for (int i = 0; i < exponent_rows.rows; i++) {
    double s = 0.0;
    for (int k = 0; k < n; k++) {
      int64_t rp = exponent_rows(i, 2 * k), rpp = exponent_rows(i, 2 * k + 1);
      int64_t w = std::max({std::abs(rp), std::abs(rpp), std::abs(rp + rpp)});
      s += double(w) * double(w);
    }
    if (s > 1.0) total += 0.5 * std::log2(s);
  }
  return total;
}

// Forward fraction-free elimination with column pivot tracking, then an
// exact back substitution scaled so every entry is an integer (entries of
// the result are +- maximal minors of m, up to a common factor).
template <typename T>
std::optional<std::vector<T>> kernel_vector(const Mat<T>& m) {
  const int rows = m.rows, n = m.cols;
  if (n != rows + 1)
    throw std::invalid_argument("kernel_vector: expected (n-1) x n input");
  if (rows == 0) return std::vector<T>{T(1)};

  Mat<T> w = m;
  std::vector<int> pivcol(rows, -1);
  std::vector<char> ispiv(n, 0);
  T prev(1);
  for (int step = 0; step < rows; step++) {
    int pc = -1, pr = -1;
    for (int c = 0; c < n && pc < 0; c++) {
      if (ispiv[c]) continue;
      for (int r = step; r < rows; r++)
        if (w(r, c) != 0) { pc = c; pr = r; break; }
    }
    if (pc < 0) return std::nullopt;  // rank < rows
    if (pr != step)
      for (int c = 0; c < n; c++) std::swap(w(step, c), w(pr, c));
    const T p = w(step, pc);
    for (int i = step + 1; i < rows; i++) {
      const T mi = w(i, pc);
      for (int c = 0; c < n; c++) {
        if (ispiv[c] || c == pc) continue;
        w(i, c) = (w(i, c) * p - mi * w(step, c)) / prev;
      }
      w(i, pc) = T(0);
    }
    ispiv[pc] = 1;
    pivcol[step] = pc;
    prev = p;
  }
  int free_col = -1;
  for (int c = 0; c < n; c++)
    if (!ispiv[c]) { free_col = c; break; }

  std::vector<T> x(n, T(0));
  const T last = w(rows - 1, pivcol[rows - 1]);
  x[free_col] = last;
  for (int i = rows - 1; i >= 0; i--) {
    T s = w(i, free_col) * last;
    for (int j = i + 1; j < rows; j++) s += w(i, pivcol[j]) * x[pivcol[j]];
    x[pivcol[i]] = -s / w(i, pivcol[i]);
  }
  return x;
}

template std::optional<std::vector<int64_t>> kernel_vector<int64_t>(const Mat<int64_t>&);
template std::optional<std::vector<BigInt>> kernel_vector<BigInt>(const Mat<BigInt>&);

KernelClass kernel_sign_class(int64_t* M, int rows, int n, int64_t* kv) {
  if (rows == 0) {
    kv[0] = 1;
    return KernelClass::Definite;
  }
  // column-major with a row permutation kept aside; callers keep n <= 64
  int rowperm_buf[64];
  int pivcol_buf[64];
  char ispiv_buf[66] = {0};
  if (rows > 63) throw std::invalid_argument("kernel_sign_class: too large");
  int* rowperm = rowperm_buf;
  int* pivcol = pivcol_buf;
  char* ispiv = ispiv_buf;
  for (int i = 0; i < rows; i++) rowperm[i] = i;
  auto at = [&](int r, int c) -> int64_t& { return M[size_t(c) * rows + rowperm[r]]; };

  int64_t prev = 1;
  for (int step = 0; step < rows; step++) {
    int pc = -1, pr = -1;
    for (int c = 0; c < n && pc < 0; c++) {
      if (ispiv[c]) continue;
      for (int r = step; r < rows; r++)
        if (at(r, c) != 0) { pc = c; pr = r; break; }
    }
    if (pc < 0) return KernelClass::RankDeficient;
    std::swap(rowperm[step], rowperm[pr]);
    const int64_t p = at(step, pc);
    for (int i = step + 1; i < rows; i++) {
      const int64_t mi = at(i, pc);
      for (int c = 0; c < n; c++) {
        if (ispiv[c] || c == pc) continue;
        at(i, c) = (at(i, c) * p - mi * at(step, c)) / prev;
      }
      at(i, pc) = 0;
    }
    ispiv[pc] = 1;
    pivcol[step] = pc;
    prev = p;
  }
  int free_col = -1;
  for (int c = 0; c < n; c++)
    if (!ispiv[c]) { free_col = c; break; }

  const int64_t last = at(rows - 1, pivcol[rows - 1]);
  kv[free_col] = last;
  for (int i = rows - 1; i >= 0; i--) {
    int64_t s = at(i, free_col) * last;
    for (int j = i + 1; j < rows; j++) s += at(i, pivcol[j]) * kv[pivcol[j]];
    kv[pivcol[i]] = -s / at(i, pivcol[i]);
  }
  bool pos = true, neg = true, zero = false;
  for (int c = 0; c < n; c++) {
    if (kv[c] == 0) zero = true;
    if (kv[c] <= 0) pos = false;
    if (kv[c] >= 0) neg = false;
  }
  if (pos || neg) return KernelClass::Definite;
  return zero ? KernelClass::ZeroEntry : KernelClass::Mixed;
}

}  // namespace bslope
