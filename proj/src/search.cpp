#include "bslope/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <iostream>
#include <mutex>
#include <queue>
#include <set>
#include <thread>

namespace bslope {

std::atomic<bool>& search_interrupt_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}

IndexEvaluation evaluate_index(const ExponentMatrix& R, const CurvePair& curves,
                               const DegenerationIndex& idx) {
  Mat<int64_t> RI = degeneration_matrix(R, idx);
  IndexEvaluation ev;
  ev.index = idx;
  ev.dvec = degeneration_vector(RI);
  if (!is_ideal_point(ev.dvec)) return ev;
  Valuations v = valuations(curves.meridian, curves.longitude, idx, ev.dvec);
  SlopeResult r;
  r.index = idx;
  r.d = ev.dvec.d;
  r.content = ev.dvec.content;
  r.v_mu = v.v_mu;
  r.v_lambda = v.v_lambda;
  if (!(v.v_mu == 0 && v.v_lambda == 0))
    r.slope = boundary_slope(v.v_mu, v.v_lambda);
  ev.result = std::move(r);
  return ev;
}

namespace {

void collect_distinct(SearchReport& rep) {
  std::set<Slope> seen;
  for (const SlopeResult& r : rep.certified)
    if (r.slope) seen.insert(*r.slope);
  rep.distinct_slopes.assign(seen.begin(), seen.end());
}

uint64_t pow3(int n) {
  uint64_t t = 1;
  for (int i = 0; i < n; i++) t *= 3;
  return t;
}

// Column variants of R(I) for the three index values, column-major per tet.
struct ColumnVariants {
  int rows = 0, n = 0;
  std::vector<int64_t> v[3];  // v[digit][tet*rows + r]

  explicit ColumnVariants(const ExponentMatrix& R) {
    rows = R.rows.rows;
    n = R.tets;
    for (auto& x : v) x.assign(size_t(n) * rows, 0);
    for (int k = 0; k < n; k++)
      for (int r = 0; r < rows; r++) {
        int64_t rp = R.rows(r, 2 * k), rpp = R.rows(r, 2 * k + 1);
        v[0][size_t(k) * rows + r] = rp;
        v[1][size_t(k) * rows + r] = rpp;
        v[2][size_t(k) * rows + r] = -rp - rpp;
      }
  }
};

struct RankedHit {
  uint64_t rank;
  SlopeResult result;
};

// Fast classification of one index; falls back to exact BigInt kernel math
// when the Hadamard bound rules out the int64 workspace.
class IndexClassifier {
 public:
  IndexClassifier(const ExponentMatrix& R, const ColumnVariants& cols)
      : cols_(cols) {
    fast_ = cols.n <= 64 && hadamard_log2_worst_index(R.rows) <= 28.0;
    if (fast_) {
      workspace_.resize(size_t(cols.rows) * cols.n);
      kv_.resize(cols.n);
    }
  }

  bool certified(const int* digits) {
    if (fast_) {
      const int rows = cols_.rows, n = cols_.n;
      if (rows == 0) return true;  // empty matrix, d = (1)
      for (int k = 0; k < n; k++)
        std::memcpy(&workspace_[size_t(k) * rows],
                    &cols_.v[digits[k]][size_t(k) * rows], sizeof(int64_t) * rows);
      return kernel_sign_class(workspace_.data(), rows, n, kv_.data()) ==
             KernelClass::Definite;
    }
    Mat<BigInt> RI(cols_.rows, cols_.n);
    for (int r = 0; r < cols_.rows; r++)
      for (int k = 0; k < cols_.n; k++)
        RI(r, k) = cols_.v[digits[k]][size_t(k) * cols_.rows + r];
    auto kv = kernel_vector<BigInt>(RI);
    if (!kv) return false;
    bool pos = true, neg = true;
    for (const BigInt& x : *kv) {
      if (x <= 0) pos = false;
      if (x >= 0) neg = false;
    }
    return pos || neg;
  }

 private:
  const ColumnVariants& cols_;
  bool fast_ = false;
  std::vector<int64_t> workspace_;
  std::vector<int64_t> kv_;
};

DegenerationIndex index_from_digits(const int* digits, int n) {
  DegenerationIndex idx(n);
  for (int i = 0; i < n; i++) idx[i] = IndexValue(digits[i]);
  return idx;
}

struct ResumePoint {
  uint64_t base = 0;
};

ResumePoint parse_resume(const std::string& token, uint64_t total) {
  size_t comma = token.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("bad resume token \"" + token + "\"");
  uint64_t last_start = std::stoull(token.substr(0, comma));
  uint64_t size = std::stoull(token.substr(comma + 1));
  uint64_t base = last_start + size;
  if (base > total)
    throw std::invalid_argument("resume token past the end of the index space");
  return ResumePoint{base};
}

// Shared-prefix DFS: each level appends one column to a fraction-free
// elimination; a prefix whose nullity reaches 2 kills the whole subtree
// (every maximal minor of any completion vanishes).
template <typename T>
class PrunedScan {
 public:
  PrunedScan(const ExponentMatrix& R, const CurvePair& curves,
             const ColumnVariants& cols, std::vector<RankedHit>& hits,
             uint64_t& scanned)
      : R_(R), curves_(curves), cols_(cols), hits_(hits), scanned_(scanned) {
    rows_ = cols.rows;
    n_ = cols.n;
    digits_.assign(n_, 0);
  }

  void run() { descend(0, 0); }

 private:
  void descend(int depth, uint64_t rank_prefix) {
    if (depth == n_) {
      scanned_++;
      if (int(piv_phys_.size()) == rows_) {
        DegenerationIndex idx = index_from_digits(digits_.data(), n_);
        IndexEvaluation ev = evaluate_index(R_, curves_, idx);
        if (ev.result) hits_.push_back({rank_prefix, std::move(*ev.result)});
      }
      return;
    }
    const int steps_before = int(piv_phys_.size());
    const int free_before = depth - steps_before;
    for (int digit = 0; digit < 3; digit++) {
      digits_[depth] = digit;
      std::vector<T> col(rows_);
      for (int r = 0; r < rows_; r++)
        col[r] = T(cols_.v[digit][size_t(depth) * rows_ + r]);
      transform(col);
      int pr = -1;
      {
        std::vector<char> pivoted(rows_, 0);
        for (int ph : piv_phys_) pivoted[ph] = 1;
        for (int r = 0; r < rows_; r++)
          if (!pivoted[r] && col[r] != 0) { pr = r; break; }
      }
      if (pr < 0) {
        if (free_before + 1 >= 2 && rows_ > 0) continue;  // nullity 2: prune
        descend(depth + 1, rank_prefix * 3 + digit);
      } else {
        piv_phys_.push_back(pr);
        piv_val_.push_back(col[pr]);
        mult_.push_back(col);
        descend(depth + 1, rank_prefix * 3 + digit);
        piv_phys_.pop_back();
        piv_val_.pop_back();
        mult_.pop_back();
      }
    }
  }

  // Replay the recorded elimination steps on a fresh column.
  void transform(std::vector<T>& col) const {
    std::vector<char> pivoted(rows_, 0);
    T prev(1);
    for (size_t j = 0; j < piv_phys_.size(); j++) {
      const int pr = piv_phys_[j];
      const T& p = piv_val_[j];
      const T cp = col[pr];
      for (int r = 0; r < rows_; r++) {
        if (pivoted[r] || r == pr) continue;
        col[r] = (col[r] * p - mult_[j][r] * cp) / prev;
      }
      pivoted[pr] = 1;
      prev = p;
    }
  }

  const ExponentMatrix& R_;
  const CurvePair& curves_;
  const ColumnVariants& cols_;
  std::vector<RankedHit>& hits_;
  uint64_t& scanned_;
  int rows_ = 0, n_ = 0;
  std::vector<int> digits_;
  std::vector<int> piv_phys_;
  std::vector<T> piv_val_;
  std::vector<std::vector<T>> mult_;
};

}  // namespace

SearchReport verify_indices(const ExponentMatrix& R, const CurvePair& curves,
                            const std::vector<DegenerationIndex>& indices) {
  auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  for (const DegenerationIndex& idx : indices) {
    if (int(idx.size()) != R.tets)
      throw std::invalid_argument("index length " + std::to_string(idx.size()) +
                                  " != tetrahedron count " + std::to_string(R.tets));
    IndexEvaluation ev = evaluate_index(R, curves, idx);
    rep.scanned++;
    if (ev.result) rep.certified.push_back(std::move(*ev.result));
  }
  collect_distinct(rep);
  rep.wall_seconds = std::chrono::duration<double>(
      std::chrono::steady_clock::now() - t0).count();
  return rep;
}

SearchReport exhaustive_search(const ExponentMatrix& R, const CurvePair& curves,
                               const SearchOptions& opts) {
  const int n = R.tets;
  if (R.rows.rows + 1 != n)
    throw std::invalid_argument(
        "exhaustive search needs one gluing equation per tetrahedron minus the "
        "omitted one (edge class count must equal tetrahedron count)");
  if (int(curves.meridian.coeffs.size()) != 2 * n)
    throw std::invalid_argument("peripheral curve length != 2 x tetrahedron count");
  if (n > 40)
    throw BudgetError("3^" + std::to_string(n) + " exceeds the enumerable range");
  if (n > 18 && !opts.force)
    throw BudgetError("3^" + std::to_string(n) +
                      " indices; pass force/--force to run anyway");
  if (n > 16)
    std::cerr << "warning: exhaustive scan of 3^" << n << " = " << pow3(n)
              << " indices may take a long time\n";

  const uint64_t total = pow3(n);
  auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  ColumnVariants cols(R);

  if (opts.prune) {
    if (opts.resume || opts.max_chunks)
      throw std::invalid_argument("pruned scan does not support resume/max_chunks");
    std::vector<RankedHit> hits;
    uint64_t scanned = 0;
    if (cols.n <= 64 && hadamard_log2_worst_index(R.rows) <= 28.0)
      PrunedScan<int64_t>(R, curves, cols, hits, scanned).run();
    else
      PrunedScan<BigInt>(R, curves, cols, hits, scanned).run();
    std::sort(hits.begin(), hits.end(),
              [](const RankedHit& a, const RankedHit& b) { return a.rank < b.rank; });
    for (RankedHit& h : hits) rep.certified.push_back(std::move(h.result));
    rep.scanned = scanned;
    collect_distinct(rep);
    rep.wall_seconds = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - t0).count();
    return rep;
  }

  const uint64_t base = opts.resume ? parse_resume(*opts.resume, total).base : 0;
  const uint64_t chunk = std::max<uint64_t>(1, opts.chunk_size);
  const uint64_t n_chunks = base >= total ? 0 : (total - base + chunk - 1) / chunk;

  int workers = opts.workers > 0 ? opts.workers
                                 : int(std::max(1u, std::thread::hardware_concurrency()));
  workers = int(std::min<uint64_t>(workers, std::max<uint64_t>(1, n_chunks)));

  std::atomic<uint64_t> next{0};
  std::atomic<uint64_t> claimed{0};
  std::mutex merge_mtx;
  std::vector<RankedHit> hits;
  std::priority_queue<uint64_t, std::vector<uint64_t>, std::greater<>> done_chunks;
  uint64_t prefix = 0;  // chunks [0, prefix) all complete

  auto worker_fn = [&]() {
    IndexClassifier cls(R, cols);
    std::vector<int> digits(n);
    std::vector<RankedHit> local;
    for (;;) {
      if (search_interrupt_flag().load(std::memory_order_relaxed)) break;
      if (opts.max_chunks &&
          claimed.fetch_add(1, std::memory_order_relaxed) >= *opts.max_chunks)
        break;
      uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= n_chunks) break;
      const uint64_t start = base + c * chunk;
      const uint64_t end = std::min(start + chunk, total);
      uint64_t v = start;
      for (int i = n - 1; i >= 0; i--) { digits[i] = int(v % 3); v /= 3; }
      local.clear();
      for (uint64_t rank = start; rank < end; rank++) {
        if (cls.certified(digits.data())) {
          DegenerationIndex idx = index_from_digits(digits.data(), n);
          IndexEvaluation ev = evaluate_index(R, curves, idx);
          if (!ev.result)
            throw std::logic_error("fast path certified an index the exact path "
                                   "rejected: " + index_to_string(idx));
          local.push_back({rank, std::move(*ev.result)});
        }
        for (int i = n - 1; i >= 0; i--) {
          if (++digits[i] < 3) break;
          digits[i] = 0;
        }
      }
      std::lock_guard<std::mutex> g(merge_mtx);
      for (RankedHit& h : local) hits.push_back(std::move(h));
      done_chunks.push(c);
      while (!done_chunks.empty() && done_chunks.top() == prefix) {
        done_chunks.pop();
        prefix++;
      }
    }
  };

  std::vector<std::thread> pool;
  for (int i = 0; i < workers; i++) pool.emplace_back(worker_fn);
  for (auto& t : pool) t.join();

  const uint64_t covered = std::min(base + prefix * chunk, total);
  if (covered < total) {
    // keep only the contiguous prefix so a resumed run re-finds the rest
    std::erase_if(hits, [&](const RankedHit& h) { return h.rank >= covered; });
    if (prefix > 0)
      rep.resume_token = std::to_string(base + (prefix - 1) * chunk) + "," +
                         std::to_string(chunk);
    else if (base > 0)
      rep.resume_token = *opts.resume;
  }
  rep.scanned = covered;
  std::sort(hits.begin(), hits.end(),
            [](const RankedHit& a, const RankedHit& b) { return a.rank < b.rank; });
  for (RankedHit& h : hits) rep.certified.push_back(std::move(h.result));
  collect_distinct(rep);
  rep.wall_seconds = std::chrono::duration<double>(
      std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace bslope
