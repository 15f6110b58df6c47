#pragma once
// Candidate streams (monomial subsets, RREF subspace representatives) and the
// extremum drivers that the footprint and GMD scans run on top of.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gmd {

// Counts saturate here instead of overflowing; a saturated total always
// exceeds any realistic scan budget, so saturated streams are never walked.
inline constexpr long long kCountCap = std::numeric_limits<long long>::max() / 4;

long long binomial_count(long long n, long long k);
long long power_count(long long base, long long exp);
long long gaussian_binomial(long long n, long long k, long long q);

// r-subsets of {0,...,n-1} in lexicographic order.
class SubsetStream {
 public:
  SubsetStream(int universe, int size);
  long long total() const { return total_; }
  const std::vector<int>& current() const { return combo_; }
  void seek(long long index);
  void next();

 private:
  int n_, r_;
  long long total_;
  std::vector<int> combo_;
};

// Canonical bases (reduced row echelon form) of the r-dimensional subspaces
// of F_p^K.  Column j of row i is a free entry iff j > pivot(i) and j is not
// itself a pivot column; the stream walks pivot supports in lexicographic
// order and, inside each support, the free entries as a base-p odometer.
class SubspaceStream {
 public:
  SubspaceStream(long long p, int ambient, int rank);
  long long total() const { return total_; }
  int rows() const { return r_; }
  int cols() const { return K_; }
  const std::vector<int64_t>& matrix() const { return mat_; }
  const std::vector<int>& pivots() const { return pivots_; }
  void seek(long long index);
  void next();

 private:
  void sync_support();
  void rebuild_matrix();
  long long block_size() const;

  long long p_;
  int K_, r_;
  long long total_;
  SubsetStream pivot_combos_;
  std::vector<int> pivots_;
  std::vector<int> free_pos_;
  std::vector<int> digits_;
  std::vector<int64_t> mat_;
};

struct ScanOutcome {
  bool any = false;           // at least one qualified candidate seen
  long long best = 0;         // extremal value over qualified candidates
  long long best_index = -1;  // smallest stream index attaining it
  long long scanned = 0;
};

// Eval receives the positioned stream and returns the candidate's value, or
// nullopt when the candidate does not qualify.
template <class Stream, class Eval>
ScanOutcome scan_extremum_serial(Stream stream, long long begin, long long end,
                                 Eval&& eval, bool maximize) {
  ScanOutcome out;
  if (begin >= end) return out;
  stream.seek(begin);
  for (long long i = begin; i < end; ++i) {
    std::optional<long long> v = eval(stream);
    ++out.scanned;
    if (v && (!out.any || (maximize ? *v > out.best : *v < out.best))) {
      out.any = true;
      out.best = *v;
      out.best_index = i;
    }
    if (i + 1 < end) stream.next();
  }
  return out;
}

inline void merge_outcome(ScanOutcome& acc, const ScanOutcome& part, bool maximize) {
  acc.scanned += part.scanned;
  if (!part.any) return;
  // Parts are merged in stream order, so ties keep the smallest index.
  if (!acc.any || (maximize ? part.best > acc.best : part.best < acc.best)) {
    acc.any = true;
    acc.best = part.best;
    acc.best_index = part.best_index;
  }
}

// Parallel driver: contiguous chunks, one positioned stream per thread,
// in-order merge.  The result (including the witness index) is identical to
// the serial reference for any thread count.
template <class StreamFactory, class Eval>
ScanOutcome scan_extremum(StreamFactory&& make_stream, long long total,
                          Eval&& eval, bool maximize, int threads = 0) {
#ifdef _OPENMP
  int width = threads > 0 ? threads : omp_get_max_threads();
#else
  int width = 1;
  (void)threads;
#endif
  if (width <= 1 || total < 2048)
    return scan_extremum_serial(make_stream(), 0, total, eval, maximize);

  long long chunks = width;
  std::vector<ScanOutcome> parts(chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 1) num_threads(width)
#endif
  for (long long c = 0; c < chunks; ++c) {
    long long begin = total * c / chunks;
    long long end = total * (c + 1) / chunks;
    parts[c] = scan_extremum_serial(make_stream(), begin, end, eval, maximize);
  }
  ScanOutcome out;
  for (const ScanOutcome& part : parts) merge_outcome(out, part, maximize);
  return out;
}

}  // namespace gmd
