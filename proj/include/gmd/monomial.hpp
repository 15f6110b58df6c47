#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmd {

// Hard cap on ring size; one slot is reserved for the elimination variable,
// so user rings may declare at most kMaxVars - 1 variables.
constexpr int kMaxVars = 16;

// Exponent vector with inline storage. The number of active variables is
// carried by the enclosing ring; unused slots stay zero.
struct Monomial {
  std::array<uint16_t, kMaxVars> e{};

  static Monomial one() { return Monomial{}; }
  static Monomial var(int i, int k = 1) {
    Monomial m;
    m.e[i] = static_cast<uint16_t>(k);
    return m;
  }

  int deg(int nvars) const {
    int d = 0;
    for (int i = 0; i < nvars; ++i) d += e[i];
    return d;
  }
  bool is_one(int nvars) const {
    for (int i = 0; i < nvars; ++i)
      if (e[i]) return false;
    return true;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
  // canonical (order-independent) comparison, for containers and dedup
  bool operator<(const Monomial& o) const { return e < o.e; }
};

inline bool divides(const Monomial& a, const Monomial& b, int nvars) {
  for (int i = 0; i < nvars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b, int nvars) {
  Monomial r;
  for (int i = 0; i < nvars; ++i) {
    int s = a.e[i] + b.e[i];
    if (s > 0xffff) throw std::overflow_error("monomial exponent overflow");
    r.e[i] = static_cast<uint16_t>(s);
  }
  return r;
}

// b / a, assuming a | b
inline Monomial mono_quot(const Monomial& b, const Monomial& a, int nvars) {
  Monomial r;
  for (int i = 0; i < nvars; ++i) r.e[i] = static_cast<uint16_t>(b.e[i] - a.e[i]);
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b, int nvars) {
  Monomial r;
  for (int i = 0; i < nvars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b, int nvars) {
  for (int i = 0; i < nvars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

enum class OrderKind { Lex, GrLex, GrevLex };

// Term order. perm lists variable indices by decreasing precedence
// (perm[0] is the largest variable). elim_block = 1 marks the internal
// elimination order: variable 0 is compared first, then the base order
// applies to the rest. Only single-variable blocks are ever used.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  std::vector<int> perm;
  int elim_block = 0;

  static MonomialOrder make(OrderKind k, int nvars) {
    MonomialOrder o;
    o.kind = k;
    o.perm.resize(nvars);
    std::iota(o.perm.begin(), o.perm.end(), 0);
    return o;
  }
};

// MonomialOrder for the ring [w, t1..ts] obtained by prepending an
// elimination variable (index 0) to a base ring with order `base`.
inline MonomialOrder elim_extend(const MonomialOrder& base) {
  MonomialOrder o;
  o.kind = base.kind;
  o.elim_block = 1;
  o.perm.reserve(base.perm.size());
  for (int v : base.perm) o.perm.push_back(v + 1);
  return o;
}

// Three-way comparison: +1 if a > b, -1 if a < b, 0 if equal.
inline int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& o) {
  if (o.elim_block) {
    if (a.e[0] != b.e[0]) return a.e[0] > b.e[0] ? 1 : -1;
  }
  const auto& perm = o.perm;
  const int n = static_cast<int>(perm.size());
  if (o.kind != OrderKind::Lex) {
    int da = 0, db = 0;
    for (int i = 0; i < n; ++i) {
      da += a.e[perm[i]];
      db += b.e[perm[i]];
    }
    if (da != db) return da > db ? 1 : -1;
  }
  if (o.kind == OrderKind::GrevLex) {
    for (int i = n - 1; i >= 0; --i) {
      int d = static_cast<int>(a.e[perm[i]]) - static_cast<int>(b.e[perm[i]]);
      if (d) return d < 0 ? 1 : -1;
    }
    return 0;
  }
  for (int i = 0; i < n; ++i) {
    int d = static_cast<int>(a.e[perm[i]]) - static_cast<int>(b.e[perm[i]]);
    if (d) return d > 0 ? 1 : -1;
  }
  return 0;
}

inline std::string order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    default: return "grevlex";
  }
}

}  // namespace gmd
