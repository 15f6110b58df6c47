#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace gmd {

// Prime field F_p. Elements are canonical residues in [0, p).
// p is capped so that products fit in a signed 64-bit value.
struct PrimeField {
  using Elem = long long;

  long long p = 2;

  PrimeField() = default;
  explicit PrimeField(long long prime) : p(prime) {
    if (p < 2 || p > (1LL << 31) || !is_prime(p))
      throw std::invalid_argument("GF(" + std::to_string(prime) + "): modulus must be a prime < 2^31");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long n) const {
    Elem r = n % p;
    return r < 0 ? r + p : r;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
  Elem sub(Elem a, Elem b) const { Elem s = a - b; return s < 0 ? s + p : s; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      long long q = r / nr;
      t -= q * nt; std::swap(t, nt);
      r -= q * nr; std::swap(r, nr);
    }
    return t < 0 ? t + p : t;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  std::string str(const Elem& a) const { return std::to_string(a); }
  std::string name() const { return "GF(" + std::to_string(p) + ")"; }

  static bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }
};

// Field of rationals with arbitrary-precision arithmetic.
struct RationalField {
  using Elem = mpq_class;

  Elem zero() const { return mpq_class(0); }
  Elem one() const { return mpq_class(1); }
  Elem from_int(long long n) const { return mpq_class(static_cast<long>(n)); }
  Elem from_fraction(long long num, long long den) const {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
  }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  std::string str(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "QQ"; }
};

}  // namespace gmd
