#include "gmd/enumeration.hpp"

#include <stdexcept>

namespace gmd {

namespace {

long long clamp_count(__int128 v) {
  return v >= static_cast<__int128>(kCountCap) ? kCountCap
                                               : static_cast<long long>(v);
}

}  // namespace

long long binomial_count(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc >= static_cast<__int128>(kCountCap)) return kCountCap;
  }
  return static_cast<long long>(acc);
}

long long power_count(long long base, long long exp) {
  __int128 acc = 1;
  for (long long i = 0; i < exp; ++i) {
    acc *= base;
    if (acc >= static_cast<__int128>(kCountCap)) return kCountCap;
  }
  return static_cast<long long>(acc);
}

long long gaussian_binomial(long long n, long long k, long long q) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (q <= 1) throw std::invalid_argument("gaussian_binomial needs q >= 2");
  // q-Pascal recurrence [n k] = [n-1 k-1] + q^k [n-1 k], clamped.
  std::vector<__int128> row(static_cast<size_t>(k) + 1, 0);
  row[0] = 1;
  const __int128 cap = kCountCap;
  for (long long i = 1; i <= n; ++i) {
    for (long long j = std::min(i, k); j >= 1; --j) {
      __int128 qk = 1;
      for (long long t = 0; t < j && qk < cap; ++t) qk *= q;
      __int128 v = row[j - 1] + (qk >= cap ? cap : qk * row[j]);
      row[j] = v >= cap ? cap : v;
    }
  }
  return clamp_count(row[k]);
}

SubsetStream::SubsetStream(int universe, int size)
    : n_(universe), r_(size), total_(binomial_count(universe, size)) {
  if (size < 0 || universe < 0)
    throw std::invalid_argument("subset stream needs nonnegative sizes");
  if (total_ > 0) seek(0);
}

void SubsetStream::seek(long long index) {
  if (index < 0 || index >= total_)
    throw std::out_of_range("subset index out of range");
  combo_.assign(r_, 0);
  int v = 0;
  for (int i = 0; i < r_; ++i) {
    while (true) {
      long long below = binomial_count(n_ - 1 - v, r_ - 1 - i);
      if (index < below) break;
      index -= below;
      ++v;
    }
    combo_[i] = v++;
  }
}

void SubsetStream::next() {
  int i = r_ - 1;
  while (i >= 0 && combo_[i] == n_ - r_ + i) --i;
  if (i < 0) return;  // past the last combination; callers bound by total()
  ++combo_[i];
  for (int j = i + 1; j < r_; ++j) combo_[j] = combo_[j - 1] + 1;
}

SubspaceStream::SubspaceStream(long long p, int ambient, int rank)
    : p_(p),
      K_(ambient),
      r_(rank),
      total_(gaussian_binomial(ambient, rank, p)),
      pivot_combos_(ambient, std::min(rank, ambient)) {
  if (p < 2) throw std::invalid_argument("subspace stream needs p >= 2");
  if (rank < 0 || ambient < 0)
    throw std::invalid_argument("subspace stream needs nonnegative sizes");
  mat_.assign(static_cast<size_t>(std::max(r_, 1)) * std::max(K_, 1), 0);
  if (total_ > 0) seek(0);
}

void SubspaceStream::sync_support() {
  pivots_ = pivot_combos_.current();
  free_pos_.clear();
  std::vector<char> is_pivot(K_, 0);
  for (int c : pivots_) is_pivot[c] = 1;
  for (int i = 0; i < r_; ++i)
    for (int j = pivots_[i] + 1; j < K_; ++j)
      if (!is_pivot[j]) free_pos_.push_back(i * K_ + j);
  digits_.assign(free_pos_.size(), 0);
}

long long SubspaceStream::block_size() const {
  return power_count(p_, static_cast<long long>(free_pos_.size()));
}

void SubspaceStream::rebuild_matrix() {
  mat_.assign(mat_.size(), 0);
  for (int i = 0; i < r_; ++i) mat_[i * K_ + pivots_[i]] = 1;
  for (size_t t = 0; t < free_pos_.size(); ++t) mat_[free_pos_[t]] = digits_[t];
}

void SubspaceStream::seek(long long index) {
  if (index < 0 || index >= total_)
    throw std::out_of_range("subspace index out of range");
  if (total_ >= kCountCap)
    throw std::out_of_range("subspace stream too large to address");
  pivot_combos_.seek(0);
  sync_support();
  long long rest = index;
  while (rest >= block_size()) {
    rest -= block_size();
    pivot_combos_.next();
    sync_support();
  }
  // Big-endian base-p digits over the free entries in row-major order.
  for (size_t t = free_pos_.size(); t-- > 0;) {
    digits_[t] = static_cast<int>(rest % p_);
    rest /= p_;
  }
  rebuild_matrix();
}

void SubspaceStream::next() {
  for (size_t t = digits_.size(); t-- > 0;) {
    if (digits_[t] + 1 < p_) {
      ++digits_[t];
      mat_[free_pos_[t]] = digits_[t];
      return;
    }
    digits_[t] = 0;
    mat_[free_pos_[t]] = 0;
  }
  pivot_combos_.next();
  sync_support();
  rebuild_matrix();
}

}  // namespace gmd
