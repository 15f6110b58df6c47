#include "gmd/hilbert.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gmd {

namespace {

using Poly1 = std::vector<long long>;

void trim(Poly1& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly1 shift_add(const Poly1& a, const Poly1& b, int k) {  // a + x^k b
  Poly1 r(std::max(a.size(), b.size() + k), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i + k] += b[i];
  trim(r);
  return r;
}

Poly1 mul(const Poly1& a, const Poly1& b) {
  if (a.empty() || b.empty()) return {};
  Poly1 r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

long long eval_one(const Poly1& a) {
  return std::accumulate(a.begin(), a.end(), 0LL);
}

// exact division by (1 - x); requires a(1) == 0
Poly1 div_one_minus_x(const Poly1& a) {
  if (a.empty()) return {};
  Poly1 q(a.size() - 1, 0);
  long long carry = 0;
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    carry += a[i];
    q[i] = carry;
  }
  trim(q);
  return q;
}

bool pairwise_coprime(const MonomialIdeal& m) {
  const auto& g = m.gens();
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j)
      if (!mono_coprime(g[i], g[j], m.nvars())) return false;
  return true;
}

Poly1 hn(const MonomialIdeal& m) {
  if (m.is_unit()) return {};
  const auto& gens = m.gens();
  if (pairwise_coprime(m)) {
    Poly1 r{1};
    for (const auto& g : gens) {
      Poly1 f(g.deg(m.nvars()) + 1, 0);
      f[0] = 1;
      f[g.deg(m.nvars())] = -1;
      r = mul(r, f);
    }
    return r;
  }
  // pivot: most frequent variable; exponent = median of its exponents,
  // clamped below the least pure-power exponent so both branches shrink
  int piv = -1, best = 0;
  for (int i = 0; i < m.nvars(); ++i) {
    int freq = 0;
    for (const auto& g : gens) freq += g.e[i] ? 1 : 0;
    if (freq > best) { best = freq; piv = i; }
  }
  std::vector<int> exps;
  int pure_min = std::numeric_limits<int>::max();
  for (const auto& g : gens) {
    if (!g.e[piv]) continue;
    exps.push_back(g.e[piv]);
    if (g.deg(m.nvars()) == g.e[piv]) pure_min = std::min(pure_min, static_cast<int>(g.e[piv]));
  }
  std::sort(exps.begin(), exps.end());
  int e = exps[exps.size() / 2];
  if (pure_min != std::numeric_limits<int>::max()) e = std::min(e, pure_min - 1);
  e = std::max(e, 1);
  Monomial v = Monomial::var(piv, e);
  Poly1 ns = hn(mono_sum(m, {v}));
  Poly1 nc = hn(mono_colon(m, v));
  return shift_add(ns, nc, e);
}

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// binomial coefficient polynomial C(x, k) at an arbitrary integer x
long long binom_poly(long long x, int k) {
  if (k < 0) return 0;
  long long num = 1;
  for (int i = 0; i < k; ++i) num *= (x - i);
  long long den = 1;
  for (int i = 2; i <= k; ++i) den *= i;
  return num / den;
}

}  // namespace

long long HilbertData::hilbert_function(int d) const {
  if (d < 0) return 0;
  long long r = 0;
  for (size_t i = 0; i < numerator.size() && static_cast<int>(i) <= d; ++i)
    r += numerator[i] * binom(d - static_cast<long long>(i) + nvars - 1, nvars - 1);
  return r;
}

long long HilbertData::hilbert_polynomial(long long d) const {
  if (dim <= 0) return 0;
  long long r = 0;
  for (size_t i = 0; i < h.size(); ++i)
    r += h[i] * binom_poly(d - static_cast<long long>(i) + dim - 1, dim - 1);
  return r;
}

std::vector<long long> hilbert_numerator(const MonomialIdeal& m) { return hn(m); }

std::pair<int, long long> dim_degree(const MonomialIdeal& m) {
  Poly1 n = hn(m);
  if (n.empty()) return {-1, 0};
  int drops = 0;
  while (eval_one(n) == 0) {
    n = div_one_minus_x(n);
    ++drops;
  }
  return {m.nvars() - drops, eval_one(n)};
}

HilbertData hilbert_data(const MonomialIdeal& m) {
  HilbertData out;
  out.nvars = m.nvars();
  out.numerator = hn(m);
  if (out.numerator.empty()) throw std::invalid_argument("hilbert_data of the zero module");
  Poly1 h = out.numerator;
  int drops = 0;
  while (eval_one(h) == 0) {
    h = div_one_minus_x(h);
    ++drops;
  }
  out.dim = m.nvars() - drops;
  out.h = h;
  out.degree = eval_one(h);
  const int hdeg = static_cast<int>(h.size()) - 1;
  out.a_invariant = hdeg - out.dim;
  int n0 = std::max(out.a_invariant + 1, 0);
  while (n0 > 0 && out.hilbert_function(n0 - 1) == out.hilbert_polynomial(n0 - 1)) --n0;
  out.reg_index = n0;
  if (m.is_zero()) {
    out.cm_regularity = hdeg;
    out.cm_route = "polynomial ring";
  } else if (out.dim == 0) {
    out.cm_regularity = hdeg;
    out.cm_route = "dim 0";
  } else if (out.dim == 1 && mono_is_unmixed(m)) {
    out.cm_regularity = hdeg;
    out.cm_route = "dim 1, initial ideal unmixed";
  }
  return out;
}

}  // namespace gmd
