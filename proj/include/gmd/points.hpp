#pragma once
// Projective point sets over prime fields, their vanishing ideals, and the
// Reed-Muller-type evaluation codes they cut out.

#include <cstdint>
#include <optional>
#include <vector>

#include "gmd/ideal.hpp"
#include "gmd/polynomial.hpp"

namespace gmd {

struct ProjectivePointSet {
  long long p = 2;
  int dim = 0;  // projective dimension; points carry dim+1 coordinates
  std::vector<std::vector<long long>> pts;

  int ncoords() const { return dim + 1; }
  int size() const { return static_cast<int>(pts.size()); }
};

// Normalizes (first nonzero coordinate scaled to 1) and deduplicates,
// keeping first-occurrence order.
ProjectivePointSet make_point_set(long long p, int dim,
                                  const std::vector<std::vector<long long>>& raw);

// Every point of P^dim(F_p), normalized.
std::vector<std::vector<long long>> projective_space_points(long long p, int dim);

long long eval_at_point(const Polynomial<PrimeField>& f,
                      const std::vector<long long>& pt);

std::vector<Polynomial<PrimeField>> point_prime_gens(
    const RingPtr<PrimeField>& ring, const std::vector<long long>& pt);
Ideal<PrimeField> point_prime(const RingPtr<PrimeField>& ring,
                              const std::vector<long long>& pt);

// I(X), computed as the intersection of the point primes.
Ideal<PrimeField> vanishing_ideal(const RingPtr<PrimeField>& ring,
                                  const ProjectivePointSet& X);

// All monomials of degree d in the ring, decreasing in the ring order.
std::vector<Monomial> degree_monomials(const RingPtr<PrimeField>& ring, int d);

// values[i][j] = polys[i] evaluated at X.pts[j]
std::vector<std::vector<long long>> eval_table(
    const std::vector<Polynomial<PrimeField>>& polys,
    const ProjectivePointSet& X);

struct EvaluationCode {
  long long p = 2;
  int d = 0;
  std::vector<std::vector<long long>> gen;  // k x n generator matrix, RREF rows
  int n() const { return gen.empty() ? 0 : static_cast<int>(gen[0].size()); }
  int k() const { return static_cast<int>(gen.size()); }
};

// C_X(d).  The basis comes from evaluating all degree-d monomials and row
// reducing, with no Groebner machinery behind it.
EvaluationCode evaluation_code(const ProjectivePointSet& X,
                               const RingPtr<PrimeField>& ring, int d);

// r-th generalized Hamming weight by direct subspace scan; nullopt when the
// number of subspaces exceeds the budget.
std::optional<long long> generalized_hamming_weight(
    const EvaluationCode& C, int r, long long budget = 10'000'000,
    int threads = 0);
std::vector<std::optional<long long>> weight_hierarchy(
    const EvaluationCode& C, long long budget = 10'000'000, int threads = 0);

// max |Z_X(f)| over degree-d forms with at least one zero in X that do not
// vanish on all of X; 0 when no form qualifies.  Walks every coefficient
// vector, so it is only for cross-checking small cases.
long long allforms_hyp_oracle(const ProjectivePointSet& X,
                              const RingPtr<PrimeField>& ring, int d,
                              long long budget = 4'000'000);

}  // namespace gmd
