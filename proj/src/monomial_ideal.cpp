#include "gmd/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmd {

namespace {

bool mono_less_canonical(const Monomial& a, const Monomial& b) {
  return a.e < b.e;
}

std::vector<Monomial> minimalize(int nvars, std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), mono_less_canonical);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& g : gens) {
      if (g == m) continue;
      if (divides(g, m, nvars) && !(divides(m, g, nvars))) { redundant = true; break; }
    }
    if (!redundant) out.push_back(m);
  }
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  gens_ = minimalize(nvars_, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (divides(g, m, nvars_)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

MonomialIdeal mono_sum(const MonomialIdeal& a, const std::vector<Monomial>& extra) {
  std::vector<Monomial> g = a.gens();
  g.insert(g.end(), extra.begin(), extra.end());
  return MonomialIdeal(a.nvars(), std::move(g));
}

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  return mono_sum(a, b.gens());
}

MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> g;
  g.reserve(a.gens().size() * b.gens().size());
  for (const auto& x : a.gens())
    for (const auto& y : b.gens()) g.push_back(mono_lcm(x, y, a.nvars()));
  return MonomialIdeal(a.nvars(), std::move(g));
}

MonomialIdeal mono_colon(const MonomialIdeal& a, const Monomial& m) {
  std::vector<Monomial> g;
  g.reserve(a.gens().size());
  for (const auto& x : a.gens()) {
    Monomial q;
    for (int i = 0; i < a.nvars(); ++i)
      q.e[i] = static_cast<uint16_t>(x.e[i] > m.e[i] ? x.e[i] - m.e[i] : 0);
    g.push_back(q);
  }
  return MonomialIdeal(a.nvars(), std::move(g));
}

MonomialIdeal mono_colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (b.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  bool first = true;
  MonomialIdeal acc;
  for (const auto& m : b.gens()) {
    MonomialIdeal c = mono_colon(a, m);
    acc = first ? c : mono_intersect(acc, c);
    first = false;
  }
  return acc;
}

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& m) {
  if (m.is_zero() || m.is_unit())
    throw std::invalid_argument("irreducible decomposition needs a proper nonzero ideal");
  const int n = m.nvars();
  std::vector<MonomialIdeal> work{m}, leaves;
  while (!work.empty()) {
    MonomialIdeal cur = std::move(work.back());
    work.pop_back();
    int split = -1;
    for (size_t gi = 0; gi < cur.gens().size() && split < 0; ++gi) {
      int support = 0;
      for (int i = 0; i < n; ++i) support += cur.gens()[gi].e[i] ? 1 : 0;
      if (support >= 2) split = static_cast<int>(gi);
    }
    if (split < 0) {
      leaves.push_back(std::move(cur));
      continue;
    }
    // cur = (cur + (u)) \cap (cur + (v)) for the coprime split g = u*v
    const Monomial g = cur.gens()[split];
    int v0 = 0;
    while (!g.e[v0]) ++v0;
    Monomial u = Monomial::var(v0, g.e[v0]);
    Monomial v = g;
    v.e[v0] = 0;
    work.push_back(mono_sum(cur, {u}));
    work.push_back(mono_sum(cur, {v}));
  }
  std::sort(leaves.begin(), leaves.end(),
            [](const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens() < b.gens(); });
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
  // irreducible components are meet-prime, so pairwise pruning is exact
  std::vector<MonomialIdeal> out;
  for (size_t i = 0; i < leaves.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < leaves.size() && !redundant; ++j)
      if (i != j && leaves[i].contains(leaves[j]) && leaves[i] != leaves[j]) redundant = true;
    if (!redundant) out.push_back(leaves[i]);
  }
  return out;
}

std::vector<std::vector<int>> mono_associated_primes(const MonomialIdeal& m) {
  std::vector<std::vector<int>> primes;
  for (const auto& comp : irreducible_decomposition(m)) {
    std::vector<int> supp;
    for (int i = 0; i < m.nvars(); ++i) {
      bool used = false;
      for (const auto& g : comp.gens()) used = used || g.e[i];
      if (used) supp.push_back(i);
    }
    primes.push_back(std::move(supp));
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

bool mono_is_unmixed(const MonomialIdeal& m) {
  auto primes = mono_associated_primes(m);
  for (const auto& p : primes)
    if (p.size() != primes[0].size()) return false;
  return true;
}

bool mono_is_radical(const MonomialIdeal& m) {
  for (const auto& g : m.gens())
    for (int i = 0; i < m.nvars(); ++i)
      if (g.e[i] > 1) return false;
  return true;
}

namespace {

template <class Fn>
void walk_degree(const MonomialIdeal& m, int var, int left, Monomial& cur, Fn&& fn) {
  const int n = m.nvars();
  if (var == n - 1) {
    cur.e[var] = static_cast<uint16_t>(left);
    if (!m.contains(cur)) fn(cur);
    cur.e[var] = 0;
    return;
  }
  for (int k = 0; k <= left; ++k) {
    cur.e[var] = static_cast<uint16_t>(k);
    walk_degree(m, var + 1, left - k, cur, fn);
  }
  cur.e[var] = 0;
}

}  // namespace

std::vector<Monomial> standard_monomials(const MonomialIdeal& m, int d, const MonomialOrder& order) {
  std::vector<Monomial> out;
  Monomial cur;
  walk_degree(m, 0, d, cur, [&](const Monomial& mm) { out.push_back(mm); });
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return mono_cmp(a, b, order) > 0; });
  return out;
}

long long count_standard_monomials(const MonomialIdeal& m, int d) {
  long long c = 0;
  Monomial cur;
  walk_degree(m, 0, d, cur, [&](const Monomial&) { ++c; });
  return c;
}

}  // namespace gmd
