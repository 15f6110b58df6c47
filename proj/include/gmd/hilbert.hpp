#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmd/monomial_ideal.hpp"

namespace gmd {

// Hilbert data of a graded quotient S/I, derived from the numerator N(x) of
// the Hilbert series N(x)/(1-x)^s of S/in(I). All values are exact.
struct HilbertData {
  int nvars = 0;
  std::vector<long long> numerator;  // N(x), constant term first
  std::vector<long long> h;          // h-vector: N(x)/(1-x)^(s-dim)
  int dim = 0;                       // Krull dimension of S/I
  long long degree = 0;              // h(1)
  int a_invariant = 0;               // deg h - dim
  int reg_index = 0;                 // least n with H(d) = P(d) for all d >= n
  std::optional<int> cm_regularity;  // deg h, only when CM is established
  std::string cm_route;              // how CM was established (empty if not)

  long long hilbert_function(int d) const;    // H_{S/I}(d)
  long long hilbert_polynomial(long long d) const;  // P_{S/I}(d)
};

// Numerator of the Hilbert series of S/M by the pivot recursion
//   N(M) = N(M + (v)) + x^deg(v) N(M : v),
// pivot v = power of the most frequent variable. Returns {} for the unit
// ideal (the zero module).
std::vector<long long> hilbert_numerator(const MonomialIdeal& m);

// dim and degree only; the cheap path used inside enumeration kernels.
std::pair<int, long long> dim_degree(const MonomialIdeal& m);

// Full Hilbert data. CM is established here only by the combinatorial
// criteria visible at the monomial level: dim 0, or dim 1 with M unmixed
// (then depth >= 1 is forced, and S/in CM implies S/I CM). Callers with more
// context (complete intersections, assertions) may upgrade cm_regularity.
HilbertData hilbert_data(const MonomialIdeal& m);

}  // namespace gmd
