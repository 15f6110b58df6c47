#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gmd/groebner.hpp"
#include "gmd/ideal.hpp"
#include "gmd/monomial_ideal.hpp"

namespace gmd {

namespace detail {

inline Monomial mono_shift_up(const Monomial& m, int nvars) {
  Monomial r;
  for (int i = nvars - 1; i >= 0; --i) r.e[i + 1] = m.e[i];
  r.e[0] = 0;
  return r;
}

inline Monomial mono_shift_down(const Monomial& m, int nvars) {
  Monomial r;
  for (int i = 1; i <= nvars; ++i) r.e[i - 1] = m.e[i];
  return r;
}

}  // namespace detail

// Ring [w, t1..ts] with w ahead of everything (single-variable elimination
// block over the base order).
template <class F>
RingPtr<F> elimination_ring(const RingPtr<F>& ring) {
  std::vector<std::string> names;
  names.reserve(ring->vars.size() + 1);
  names.push_back("@w");
  names.insert(names.end(), ring->vars.begin(), ring->vars.end());
  return std::make_shared<const PolyRing<F>>(ring->field, std::move(names),
                                             elim_extend(ring->order));
}

template <class F>
Polynomial<F> lift_to_elim(const Polynomial<F>& f, const RingPtr<F>& ext) {
  std::vector<typename Polynomial<F>::Term> ts;
  ts.reserve(f.terms().size());
  const int n = f.ring()->nvars();
  for (const auto& t : f.terms()) ts.push_back({t.c, detail::mono_shift_up(t.m, n)});
  return Polynomial<F>(ext, std::move(ts));
}

template <class F>
Polynomial<F> project_from_elim(const Polynomial<F>& f, const RingPtr<F>& base) {
  std::vector<typename Polynomial<F>::Term> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) ts.push_back({t.c, detail::mono_shift_down(t.m, base->nvars())});
  return Polynomial<F>(base, std::move(ts));
}

// I cap J = (w I + (1-w) J) cap S, via a Groebner basis for the elimination
// order and the aux-free slice.
template <class F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b) {
  const auto& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal<F>(ring, {});
  RingPtr<F> ext = elimination_ring(ring);
  Polynomial<F> w = Polynomial<F>::variable(ext, 0);
  Polynomial<F> one_minus_w = Polynomial<F>::constant(ext, ext->field.one()) - w;
  std::vector<Polynomial<F>> gens;
  for (const auto& f : a.gens()) gens.push_back(lift_to_elim(f, ext) * w);
  for (const auto& g : b.gens()) gens.push_back(lift_to_elim(g, ext) * one_minus_w);
  std::vector<Polynomial<F>> out;
  for (const auto& f : reduced_groebner(ext, gens)) {
    bool aux_free = true;
    for (const auto& t : f.terms()) aux_free = aux_free && t.m.e[0] == 0;
    if (aux_free) out.push_back(project_from_elim(f, ring));
  }
  return Ideal<F>(ring, std::move(out));
}

// quotient of f by g when g divides f exactly
template <class F>
Polynomial<F> exact_divide(const Polynomial<F>& f, const Polynomial<F>& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto ring = f.ring();
  const auto& fld = ring->field;
  const int n = ring->nvars();
  Polynomial<F> p = f;
  std::vector<typename Polynomial<F>::Term> q;
  while (!p.is_zero()) {
    if (!divides(g.leading_monomial(), p.leading_monomial(), n))
      throw std::domain_error("exact_divide: not divisible");
    auto c = fld.div(p.leading_coeff(), g.leading_coeff());
    Monomial m = mono_quot(p.leading_monomial(), g.leading_monomial(), n);
    p.axpy_term(c, m, g);
    q.push_back({std::move(c), m});
  }
  return Polynomial<F>(ring, std::move(q));
}

template <class F>
bool ideal_contains(const Ideal<F>& I, const Polynomial<F>& f) {
  return normal_form(f, I.groebner()).is_zero();
}

template <class F>
bool ideal_contains(const Ideal<F>& I, const Ideal<F>& J) {
  for (const auto& g : J.gens())
    if (!ideal_contains(I, g)) return false;
  return true;
}

template <class F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b) {
  const auto& x = a.groebner();
  const auto& y = b.groebner();
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return false;
  return true;
}

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& I, const std::vector<Polynomial<F>>& extra) {
  std::vector<Polynomial<F>> g = I.gens();
  g.insert(g.end(), extra.begin(), extra.end());
  return Ideal<F>(I.ring(), std::move(g));
}

// (I : f) = (I cap (f)) / f
template <class F>
Ideal<F> colon(const Ideal<F>& I, const Polynomial<F>& f) {
  if (f.is_zero()) throw std::domain_error("colon by zero");
  if (I.is_zero()) return I;
  Ideal<F> cap = intersect(I, Ideal<F>(I.ring(), {f}));
  std::vector<Polynomial<F>> out;
  out.reserve(cap.gens().size());
  for (const auto& g : cap.gens()) out.push_back(exact_divide(g, f));
  return Ideal<F>(I.ring(), std::move(out));
}

// (I : J) = cap over generators of J of (I : g)
template <class F>
Ideal<F> colon(const Ideal<F>& I, const Ideal<F>& J) {
  if (J.is_zero()) throw std::domain_error("colon by the zero ideal");
  std::optional<Ideal<F>> acc;
  for (const auto& g : J.gens()) {
    Ideal<F> c = colon(I, g);
    acc = acc ? intersect(*acc, c) : c;
  }
  return *acc;
}

// If every generator is a term, the underlying monomial ideal.
template <class F>
std::optional<MonomialIdeal> as_monomial_ideal(const Ideal<F>& I) {
  std::vector<Monomial> g;
  for (const auto& f : I.gens()) {
    if (f.terms().size() != 1) return std::nullopt;
    g.push_back(f.leading_monomial());
  }
  return MonomialIdeal(I.ring()->nvars(), std::move(g));
}

template <class F>
Ideal<F> ideal_from_monomial(const RingPtr<F>& ring, const MonomialIdeal& m) {
  std::vector<Polynomial<F>> g;
  g.reserve(m.gens().size());
  for (const auto& mm : m.gens()) g.push_back(Polynomial<F>::monomial(ring, mm, ring->field.one()));
  return Ideal<F>(ring, std::move(g));
}

// Is every term of f inside the monomial prime spanned by the given
// variables?  (Membership in a monomial ideal is term-by-term.)
template <class F>
bool poly_in_variable_prime(const Polynomial<F>& f, const std::vector<int>& prime_vars) {
  for (const auto& t : f.terms()) {
    bool hit = false;
    for (int v : prime_vars) hit = hit || t.m.e[v] > 0;
    if (!hit) return false;
  }
  return true;
}

// Zero-divisor test on S/I. For monomial I the associated primes decide it;
// otherwise the colon definition is used directly.
template <class F>
bool is_regular_element(const Ideal<F>& I, const Polynomial<F>& h) {
  if (h.is_zero()) return false;
  if (I.is_zero()) return true;
  if (auto mono = as_monomial_ideal(I)) {
    for (const auto& p : mono_associated_primes(*mono))
      if (poly_in_variable_prime(h, p)) return false;
    return true;
  }
  return ideal_equal(colon(I, h), I);
}

// A minimal generating set: scan by increasing degree, dropping any
// generator contained in the ideal of all the others.
template <class F>
std::vector<Polynomial<F>> minimal_generators(const Ideal<F>& I) {
  if (auto mono = as_monomial_ideal(I)) {
    std::vector<Polynomial<F>> out;
    for (const auto& m : mono->gens())
      out.push_back(Polynomial<F>::monomial(I.ring(), m, I.ring()->field.one()));
    return out;
  }
  std::vector<Polynomial<F>> gens = I.gens();
  std::stable_sort(gens.begin(), gens.end(), [](const Polynomial<F>& a, const Polynomial<F>& b) {
    return a.degree() < b.degree();
  });
  for (size_t i = 0; i < gens.size();) {
    std::vector<Polynomial<F>> others;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (normal_form(gens[i], reduced_groebner(I.ring(), others)).is_zero())
      gens.erase(gens.begin() + i);
    else
      ++i;
  }
  return gens;
}

// Image of f under the ring map sending variable i to images[i].
template <class F>
Polynomial<F> apply_ring_map(const Polynomial<F>& f, const RingPtr<F>& target,
                             const std::vector<Polynomial<F>>& images) {
  Polynomial<F> out(target);
  for (const auto& t : f.terms()) {
    Polynomial<F> term = Polynomial<F>::constant(target, t.c);
    for (int i = 0; i < f.ring()->nvars(); ++i)
      for (int k = 0; k < t.m.e[i]; ++k) term = term * images[i];
    out = out + term;
  }
  return out;
}

}  // namespace gmd
