#pragma once

#include <vector>

#include "gmd/monomial.hpp"

namespace gmd {

// Monomial ideal in a polynomial ring with nvars variables, kept as its
// unique minimal generating set in a canonical order. Field-independent.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(int nvars, std::vector<Monomial> gens);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(nvars_); }
  bool contains(const Monomial& m) const;
  // every generator of other lies in *this
  bool contains(const MonomialIdeal& other) const;
  bool operator==(const MonomialIdeal& o) const { return nvars_ == o.nvars_ && gens_ == o.gens_; }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

 private:
  int nvars_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal mono_sum(const MonomialIdeal& a, const std::vector<Monomial>& extra);
MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_colon(const MonomialIdeal& a, const Monomial& m);
MonomialIdeal mono_colon(const MonomialIdeal& a, const MonomialIdeal& b);

// Irredundant irreducible decomposition (unique). The zero and unit ideals
// are rejected.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& m);

// Associated primes as sorted lists of variable indices (the supports of the
// irredundant irreducible components), sorted lexicographically.
std::vector<std::vector<int>> mono_associated_primes(const MonomialIdeal& m);

bool mono_is_unmixed(const MonomialIdeal& m);
bool mono_is_radical(const MonomialIdeal& m);

// Degree-d monomials outside m, sorted decreasing in the given order.
std::vector<Monomial> standard_monomials(const MonomialIdeal& m, int d, const MonomialOrder& order);
long long count_standard_monomials(const MonomialIdeal& m, int d);

}  // namespace gmd
