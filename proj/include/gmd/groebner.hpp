#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gmd/ideal.hpp"
#include "gmd/polynomial.hpp"

namespace gmd {

// Remainder of f under full division by basis (leading and lower terms).
// Deterministic: the first divisor in list order wins at every step.
template <class F>
Polynomial<F> normal_form(Polynomial<F> f, const std::vector<Polynomial<F>>& basis) {
  if (f.is_zero()) return f;
  const auto ring = f.ring();
  const auto& fld = ring->field;
  const int n = ring->nvars();
  std::vector<typename Polynomial<F>::Term> rem;
  while (!f.is_zero()) {
    bool hit = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (divides(g.leading_monomial(), f.leading_monomial(), n)) {
        f.axpy_term(fld.div(f.leading_coeff(), g.leading_coeff()),
                    mono_quot(f.leading_monomial(), g.leading_monomial(), n), g);
        hit = true;
        break;
      }
    }
    if (!hit) {
      rem.push_back(f.terms()[0]);
      f = f.tail();
    }
  }
  return Polynomial<F>(ring, std::move(rem));
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  const auto ring = f.ring();
  const auto& fld = ring->field;
  const int n = ring->nvars();
  Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial(), n);
  Polynomial<F> a = f.term_mul(fld.inv(f.leading_coeff()), mono_quot(l, f.leading_monomial(), n));
  Polynomial<F> b = g.term_mul(fld.inv(g.leading_coeff()), mono_quot(l, g.leading_monomial(), n));
  return a - b;
}

// Buchberger with the Gebauer-Moeller pair pruning and normal selection.
template <class F>
std::vector<Polynomial<F>> buchberger(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens) {
  const int n = ring->nvars();
  struct Pair {
    int i, j;
    Monomial l;
  };
  std::vector<Polynomial<F>> basis;
  std::vector<bool> active;  // used when forming new pairs
  std::vector<Pair> pairs;

  auto lm = [&](int i) -> const Monomial& { return basis[i].leading_monomial(); };

  auto update = [&](int t) {
    // new pairs, pruned (Gebauer-Moeller criteria M, F, B2)
    std::vector<int> cand;
    for (int i = 0; i < t; ++i)
      if (active[i]) cand.push_back(i);
    std::vector<Pair> fresh;
    std::vector<bool> dropped(cand.size(), false);
    std::vector<Monomial> lcms(cand.size());
    for (size_t k = 0; k < cand.size(); ++k) lcms[k] = mono_lcm(lm(cand[k]), lm(t), n);
    for (size_t k = 0; k < cand.size(); ++k) {
      if (mono_coprime(lm(cand[k]), lm(t), n)) continue;  // kept for pruning, dropped below
      bool keep = true;
      for (size_t k2 = 0; k2 < cand.size() && keep; ++k2) {
        if (k2 == k) continue;
        bool other_alive = k2 > k ? true : !dropped[k2];
        if (other_alive && divides(lcms[k2], lcms[k], n) && lcms[k2] != lcms[k]) keep = false;
        if (other_alive && k2 < k && lcms[k2] == lcms[k]) keep = false;
      }
      if (!keep) dropped[k] = true;
    }
    for (size_t k = 0; k < cand.size(); ++k)
      if (!dropped[k] && !mono_coprime(lm(cand[k]), lm(t), n))
        fresh.push_back({cand[k], t, lcms[k]});
    // chain criterion on the old pairs
    std::vector<Pair> keepold;
    keepold.reserve(pairs.size());
    for (const auto& pr : pairs) {
      if (!divides(lm(t), pr.l, n) || mono_lcm(lm(pr.i), lm(t), n) == pr.l ||
          mono_lcm(lm(pr.j), lm(t), n) == pr.l)
        keepold.push_back(pr);
    }
    pairs = std::move(keepold);
    pairs.insert(pairs.end(), fresh.begin(), fresh.end());
    for (int i = 0; i < t; ++i)
      if (active[i] && divides(lm(t), lm(i), n)) active[i] = false;
    active[t] = true;
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    basis.push_back(g.monic());
    active.push_back(false);
    update(static_cast<int>(basis.size()) - 1);
  }
  while (!pairs.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      int c = mono_cmp(pairs[k].l, pairs[best].l, ring->order);
      if (c < 0 || (c == 0 && (pairs[k].j < pairs[best].j ||
                               (pairs[k].j == pairs[best].j && pairs[k].i < pairs[best].i))))
        best = k;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + best);
    Polynomial<F> r = normal_form(s_polynomial(basis[pr.i], basis[pr.j]), basis);
    if (!r.is_zero()) {
      basis.push_back(r.monic());
      active.push_back(false);
      update(static_cast<int>(basis.size()) - 1);
    }
  }
  return basis;
}

// Unique reduced Groebner basis, sorted by increasing leading monomial.
template <class F>
std::vector<Polynomial<F>> reduce_basis(const RingPtr<F>& ring, std::vector<Polynomial<F>> g) {
  const int n = ring->nvars();
  g.erase(std::remove_if(g.begin(), g.end(), [](const Polynomial<F>& f) { return f.is_zero(); }),
          g.end());
  std::sort(g.begin(), g.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    return mono_cmp(a.leading_monomial(), b.leading_monomial(), ring->order) < 0;
  });
  std::vector<Polynomial<F>> minimal;
  for (auto& f : g) {
    bool covered = false;
    for (const auto& k : minimal)
      if (divides(k.leading_monomial(), f.leading_monomial(), n)) { covered = true; break; }
    if (!covered) minimal.push_back(std::move(f));
  }
  std::vector<Polynomial<F>> out(minimal.size(), Polynomial<F>(ring));
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<F>> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out[i] = normal_form(minimal[i], others).monic();
  }
  return out;
}

template <class F>
std::vector<Polynomial<F>> reduced_groebner(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens) {
  return reduce_basis(ring, buchberger(ring, gens));
}

// test helper
template <class F>
bool is_groebner_basis(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& g) {
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j)
      if (!normal_form(s_polynomial(g[i], g[j]), g).is_zero()) return false;
  return true;
}

}  // namespace gmd
