#pragma once

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmd/field.hpp"
#include "gmd/monomial.hpp"

namespace gmd {

template <class F>
struct PolyRing {
  F field;
  std::vector<std::string> vars;
  MonomialOrder order;

  PolyRing(F f, std::vector<std::string> names, MonomialOrder ord)
      : field(std::move(f)), vars(std::move(names)), order(std::move(ord)) {
    // one slot stays reserved for the elimination variable
    if (static_cast<int>(vars.size()) > kMaxVars - (order.elim_block ? 0 : 1))
      throw std::invalid_argument("too many variables (limit " + std::to_string(kMaxVars - 1) + ")");
    if (order.perm.size() + (order.elim_block ? 1 : 0) != vars.size())
      throw std::invalid_argument("order permutation size mismatch");
  }

  int nvars() const { return static_cast<int>(vars.size()); }
  int find_var(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars[i] == name) return i;
    return -1;
  }
  std::string mono_str(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
      if (!m.e[i]) continue;
      if (!s.empty()) s += "*";
      s += vars[i];
      if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
  }
};

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <class F>
RingPtr<F> make_ring(F f, std::vector<std::string> names, OrderKind kind = OrderKind::GrevLex) {
  MonomialOrder o = MonomialOrder::make(kind, static_cast<int>(names.size()));
  return std::make_shared<const PolyRing<F>>(std::move(f), std::move(names), o);
}

// Terms are kept strictly decreasing in the ring order with no zero
// coefficients; the leading term is terms()[0].
template <class F>
class Polynomial {
 public:
  using Elem = typename F::Elem;
  struct Term {
    Elem c;
    Monomial m;
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr<F> ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
  }

  static Polynomial zero(RingPtr<F> ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr<F> ring, Elem c) {
    Polynomial p(ring);
    if (!ring->field.is_zero(c)) p.terms_.push_back({std::move(c), Monomial::one()});
    return p;
  }
  static Polynomial monomial(RingPtr<F> ring, Monomial m, Elem c) {
    Polynomial p(ring);
    if (!ring->field.is_zero(c)) p.terms_.push_back({std::move(c), m});
    return p;
  }
  static Polynomial variable(RingPtr<F> ring, int i, int k = 1) {
    return monomial(ring, Monomial::var(i, k), ring->field.one());
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Monomial& leading_monomial() const { return terms_.at(0).m; }
  const Elem& leading_coeff() const { return terms_.at(0).c; }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.deg(ring_->nvars()));
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_[0].m.deg(ring_->nvars());
    for (const auto& t : terms_)
      if (t.m.deg(ring_->nvars()) != d) return false;
    return true;
  }
  bool is_monomial() const { return terms_.size() == 1 && ring_->field.is_one(terms_[0].c); }

  // everything after the leading term
  Polynomial tail() const {
    Polynomial r(ring_);
    if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c = ring_->field.neg(t.c);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    const auto& fld = ring_->field;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      int c = mono_cmp(terms_[i].m, o.terms_[j].m, ring_->order);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        Elem s = fld.add(terms_[i].c, o.terms_[j].c);
        if (!fld.is_zero(s)) r.terms_.push_back({std::move(s), terms_[i].m});
        ++i, ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
  }
  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  // this -= (c * m) * g, the inner step of division and of Buchberger
  void axpy_term(const Elem& c, const Monomial& m, const Polynomial& g) {
    const auto& fld = ring_->field;
    const int n = ring_->nvars();
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
      Monomial gm = mono_mul(g.terms_[j].m, m, n);
      int cmp = mono_cmp(terms_[i].m, gm, ring_->order);
      if (cmp > 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (cmp < 0) {
        out.push_back({fld.neg(fld.mul(c, g.terms_[j].c)), gm});
        ++j;
      } else {
        Elem s = fld.sub(terms_[i].c, fld.mul(c, g.terms_[j].c));
        if (!fld.is_zero(s)) out.push_back({std::move(s), terms_[i].m});
        ++i, ++j;
      }
    }
    for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
    for (; j < g.terms_.size(); ++j)
      out.push_back({fld.neg(fld.mul(c, g.terms_[j].c)), mono_mul(g.terms_[j].m, m, n)});
    terms_ = std::move(out);
  }

  Polynomial term_mul(const Elem& c, const Monomial& m) const {
    const auto& fld = ring_->field;
    Polynomial r(ring_);
    if (fld.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({fld.mul(t.c, c), mono_mul(t.m, m, ring_->nvars())});
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    Polynomial r(ring_);
    for (const auto& t : o.terms_) r = r + term_mul(t.c, t.m);
    return r;
  }

  Polynomial scaled(const Elem& c) const { return term_mul(c, Monomial::one()); }
  // divide by the leading coefficient
  Polynomial monic() const {
    if (is_zero() || ring_->field.is_one(leading_coeff())) return *this;
    return scaled(ring_->field.inv(leading_coeff()));
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].m == o.terms_[i].m) || !(terms_[i].c == o.terms_[i].c)) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string str() const {
    if (terms_.empty()) return "0";
    const auto& fld = ring_->field;
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      std::string cs = fld.str(t.c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (first) {
        if (neg) os << "-", cs = cs.substr(1);
      } else {
        os << (neg ? " - " : " + ");
        if (neg) cs = cs.substr(1);
      }
      first = false;
      bool unit = (cs == "1");
      bool triv = t.m.is_one(ring_->nvars());
      if (unit && triv) os << "1";
      else if (unit) os << ring_->mono_str(t.m);
      else if (triv) os << cs;
      else os << cs << "*" << ring_->mono_str(t.m);
    }
    return os.str();
  }

 private:
  void normalize() {
    const auto& fld = ring_->field;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return mono_cmp(a.m, b.m, ring_->order) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().m == t.m) {
        out.back().c = fld.add(out.back().c, t.c);
      } else {
        out.push_back(std::move(t));
      }
    }
    out.erase(std::remove_if(out.begin(), out.end(), [&](const Term& t) { return fld.is_zero(t.c); }),
              out.end());
    terms_ = std::move(out);
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

using PolyQ = Polynomial<RationalField>;
using PolyFp = Polynomial<PrimeField>;

}  // namespace gmd
