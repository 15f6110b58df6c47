#include "gmd/enumeration.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using namespace gmd;

TEST_CASE("counting helpers") {
  CHECK(binomial_count(6, 3) == 20);
  CHECK(binomial_count(19, 7) == 50388);
  CHECK(binomial_count(5, 0) == 1);
  CHECK(binomial_count(4, 5) == 0);
  CHECK(binomial_count(200, 100) == kCountCap);

  CHECK(power_count(3, 4) == 81);
  CHECK(power_count(3, 70) == kCountCap);

  CHECK(gaussian_binomial(6, 1, 3) == 364);
  CHECK(gaussian_binomial(6, 2, 3) == 11011);
  CHECK(gaussian_binomial(6, 3, 3) == 33880);
  CHECK(gaussian_binomial(6, 4, 3) == 11011);
  CHECK(gaussian_binomial(6, 5, 3) == 364);
  CHECK(gaussian_binomial(6, 6, 3) == 1);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
  CHECK(gaussian_binomial(10, 1, 3) == 29524);
  CHECK(gaussian_binomial(3, 1, 3) == 13);
  CHECK(gaussian_binomial(64, 32, 2) == kCountCap);

  long long sum = 0;
  for (int r = 1; r <= 5; ++r) sum += gaussian_binomial(6, r, 3);
  CHECK(sum == 56630);
}

TEST_CASE("subset stream walks combinations in lexicographic order") {
  SubsetStream st(6, 3);
  REQUIRE(st.total() == 20);
  std::vector<std::vector<int>> seen;
  for (long long i = 0; i < st.total(); ++i) {
    seen.push_back(st.current());
    st.next();
  }
  std::vector<std::vector<int>> expect;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) expect.push_back({a, b, c});
  CHECK(seen == expect);

  for (long long i : {0LL, 7LL, 13LL, 19LL}) {
    SubsetStream fresh(6, 3);
    fresh.seek(i);
    CHECK(fresh.current() == seen[static_cast<size_t>(i)]);
  }

  SubsetStream empty(4, 0);
  CHECK(empty.total() == 1);
  CHECK(empty.current().empty());
  CHECK(SubsetStream(3, 5).total() == 0);
}

namespace {

bool is_rref(const SubspaceStream& st) {
  const auto& m = st.matrix();
  const auto& piv = st.pivots();
  int K = st.cols(), r = st.rows();
  for (int i = 0; i < r; ++i) {
    if (i > 0 && piv[i] <= piv[i - 1]) return false;
    for (int j = 0; j < piv[i]; ++j)
      if (m[i * K + j] != 0) return false;
    if (m[i * K + piv[i]] != 1) return false;
    for (int k = 0; k < r; ++k)
      if (k != i && m[k * K + piv[i]] != 0) return false;
  }
  return true;
}

// All nonzero vectors of the row space, sorted; a canonical label of the span.
std::vector<std::vector<int64_t>> span_label(const SubspaceStream& st, long long p) {
  int K = st.cols(), r = st.rows();
  std::vector<std::vector<int64_t>> out;
  std::vector<int> coef(r, 0);
  while (true) {
    size_t t = 0;
    while (t < coef.size() && coef[t] == p - 1) coef[t++] = 0;
    if (t == coef.size()) break;
    ++coef[t];
    std::vector<int64_t> v(K, 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < K; ++j)
        v[j] = (v[j] + coef[i] * st.matrix()[i * K + j]) % p;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("subspace stream covers every subspace exactly once") {
  SubspaceStream st(2, 4, 2);
  REQUIRE(st.total() == 35);
  std::set<std::vector<std::vector<int64_t>>> spans;
  for (long long i = 0; i < st.total(); ++i) {
    CHECK(is_rref(st));
    spans.insert(span_label(st, 2));
    st.next();
  }
  CHECK(spans.size() == 35);
}

TEST_CASE("subspace seek agrees with sequential next") {
  SubspaceStream walk(3, 4, 2);
  REQUIRE(walk.total() == 130);
  std::vector<std::vector<int64_t>> mats;
  for (long long i = 0; i < walk.total(); ++i) {
    mats.push_back(walk.matrix());
    walk.next();
  }
  for (long long i : {0LL, 1LL, 17LL, 64LL, 129LL}) {
    SubspaceStream fresh(3, 4, 2);
    fresh.seek(i);
    CHECK(fresh.matrix() == mats[static_cast<size_t>(i)]);
  }

  SubspaceStream full(2, 4, 4);
  CHECK(full.total() == 1);
  CHECK(is_rref(full));
  CHECK(SubspaceStream(3, 2, 3).total() == 0);
}

TEST_CASE("parallel scan matches the serial reference") {
  auto make = [] { return SubspaceStream(3, 6, 2); };
  long long total = make().total();
  REQUIRE(total == 11011);
  auto eval = [](const SubspaceStream& st) -> std::optional<long long> {
    long long acc = 0;
    for (size_t t = 0; t < st.matrix().size(); ++t)
      acc += st.matrix()[t] * static_cast<long long>(t + 7);
    if (acc % 3 == 0) return std::nullopt;
    return acc % 101;
  };
  for (bool maximize : {true, false}) {
    ScanOutcome serial = scan_extremum_serial(make(), 0, total, eval, maximize);
    ScanOutcome par = scan_extremum(make, total, eval, maximize, 4);
    CHECK(serial.scanned == total);
    CHECK(par.scanned == total);
    CHECK(serial.any == par.any);
    CHECK(serial.best == par.best);
    CHECK(serial.best_index == par.best_index);
  }

  auto never = [](const SubspaceStream&) -> std::optional<long long> {
    return std::nullopt;
  };
  ScanOutcome none = scan_extremum(make, total, never, true, 4);
  CHECK(!none.any);
  CHECK(none.best_index == -1);
  CHECK(none.scanned == total);
}
