#include "gmd/points.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gmd/enumeration.hpp"
#include "gmd/ideal_ops.hpp"

namespace gmd {

namespace {

int first_nonzero(const std::vector<long long>& pt) {
  for (size_t i = 0; i < pt.size(); ++i)
    if (pt[i] != 0) return static_cast<int>(i);
  return -1;
}

long long pow_mod(long long base, int exp, long long p) {
  long long acc = 1;
  base %= p;
  for (int i = 0; i < exp; ++i) acc = acc * base % p;
  return acc;
}

// In-place row reduction mod p; returns the nonzero rows in RREF.
std::vector<std::vector<long long>> rref_rows(std::vector<std::vector<long long>> rows,
                                            const PrimeField& fld) {
  if (rows.empty()) return rows;
  size_t ncols = rows[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    long long inv = fld.inv(rows[rank][col]);
    for (size_t j = col; j < ncols; ++j)
      rows[rank][j] = fld.mul(rows[rank][j], inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      long long factor = rows[i][col];
      for (size_t j = col; j < ncols; ++j)
        rows[i][j] = fld.sub(rows[i][j], fld.mul(factor, rows[rank][j]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

}  // namespace

ProjectivePointSet make_point_set(long long p, int dim,
                                  const std::vector<std::vector<long long>>& raw) {
  PrimeField fld(p);
  ProjectivePointSet X;
  X.p = p;
  X.dim = dim;
  std::set<std::vector<long long>> seen;
  for (const auto& entry : raw) {
    if (static_cast<int>(entry.size()) != dim + 1)
      throw std::invalid_argument("point has wrong number of coordinates");
    std::vector<long long> pt(entry.size());
    for (size_t i = 0; i < entry.size(); ++i) pt[i] = fld.from_int(entry[i]);
    int j = first_nonzero(pt);
    if (j < 0) throw std::invalid_argument("zero vector is not a projective point");
    long long scale = fld.inv(pt[j]);
    for (auto& c : pt) c = fld.mul(c, scale);
    if (seen.insert(pt).second) X.pts.push_back(std::move(pt));
  }
  return X;
}

std::vector<std::vector<long long>> projective_space_points(long long p, int dim) {
  std::vector<std::vector<long long>> out;
  for (int j = 0; j <= dim; ++j) {
    std::vector<long long> pt(dim + 1, 0);
    pt[j] = 1;
    int tail = dim - j;
    std::vector<long long> digits(tail, 0);
    while (true) {
      for (int t = 0; t < tail; ++t) pt[j + 1 + t] = digits[t];
      out.push_back(pt);
      int t = tail - 1;
      while (t >= 0 && digits[t] == p - 1) digits[t--] = 0;
      if (t < 0) break;
      ++digits[t];
    }
  }
  return out;
}

long long eval_at_point(const Polynomial<PrimeField>& f,
                      const std::vector<long long>& pt) {
  const PrimeField& fld = f.ring()->field;
  int nv = f.ring()->nvars();
  if (static_cast<int>(pt.size()) != nv)
    throw std::invalid_argument("point arity does not match the ring");
  long long acc = 0;
  for (const auto& term : f.terms()) {
    long long v = term.c;
    for (int i = 0; i < nv; ++i)
      if (term.m.e[i] != 0) v = fld.mul(v, pow_mod(pt[i], term.m.e[i], fld.p));
    acc = fld.add(acc, v);
  }
  return acc;
}

std::vector<Polynomial<PrimeField>> point_prime_gens(
    const RingPtr<PrimeField>& ring, const std::vector<long long>& pt) {
  using Poly = Polynomial<PrimeField>;
  int j = first_nonzero(pt);
  if (j < 0) throw std::invalid_argument("zero vector is not a projective point");
  std::vector<Poly> gens;
  for (int i = 0; i < ring->nvars(); ++i) {
    if (i == j) continue;
    Poly g = Poly::variable(ring, i);
    if (pt[i] != 0) {
      long long c = ring->field.div(pt[i], pt[j]);
      g = g - Poly::variable(ring, j).scaled(c);
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

Ideal<PrimeField> point_prime(const RingPtr<PrimeField>& ring,
                              const std::vector<long long>& pt) {
  return Ideal<PrimeField>(ring, point_prime_gens(ring, pt));
}

Ideal<PrimeField> vanishing_ideal(const RingPtr<PrimeField>& ring,
                                  const ProjectivePointSet& X) {
  if (X.pts.empty()) throw std::invalid_argument("empty point set");
  if (ring->nvars() != X.ncoords())
    throw std::invalid_argument("ring arity does not match the point set");
  Ideal<PrimeField> acc = point_prime(ring, X.pts[0]);
  for (size_t i = 1; i < X.pts.size(); ++i)
    acc = intersect(acc, point_prime(ring, X.pts[i]));
  return acc;
}

std::vector<Monomial> degree_monomials(const RingPtr<PrimeField>& ring, int d) {
  std::vector<Monomial> out;
  int nv = ring->nvars();
  Monomial m;
  auto walk = [&](auto&& self, int var, int left) -> void {
    if (var == nv - 1) {
      m.e[var] = static_cast<uint16_t>(left);
      out.push_back(m);
      m.e[var] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.e[var] = static_cast<uint16_t>(e);
      self(self, var + 1, left - e);
    }
    m.e[var] = 0;
  };
  walk(walk, 0, d);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return mono_cmp(a, b, ring->order) > 0;
  });
  return out;
}

std::vector<std::vector<long long>> eval_table(
    const std::vector<Polynomial<PrimeField>>& polys,
    const ProjectivePointSet& X) {
  std::vector<std::vector<long long>> table;
  table.reserve(polys.size());
  for (const auto& f : polys) {
    std::vector<long long> row(X.pts.size());
    for (size_t j = 0; j < X.pts.size(); ++j) row[j] = eval_at_point(f, X.pts[j]);
    table.push_back(std::move(row));
  }
  return table;
}

EvaluationCode evaluation_code(const ProjectivePointSet& X,
                               const RingPtr<PrimeField>& ring, int d) {
  if (d < 1) throw std::invalid_argument("evaluation code needs d >= 1");
  PrimeField fld(X.p);
  std::vector<std::vector<long long>> rows;
  for (const Monomial& m : degree_monomials(ring, d)) {
    std::vector<long long> row(X.pts.size());
    for (size_t j = 0; j < X.pts.size(); ++j) {
      long long v = 1;
      for (int i = 0; i < X.ncoords(); ++i)
        if (m.e[i] != 0) v = fld.mul(v, pow_mod(X.pts[j][i], m.e[i], fld.p));
      row[j] = v;
    }
    rows.push_back(std::move(row));
  }
  EvaluationCode code;
  code.p = X.p;
  code.d = d;
  code.gen = rref_rows(std::move(rows), fld);
  return code;
}

std::optional<long long> generalized_hamming_weight(const EvaluationCode& C,
                                                    int r, long long budget,
                                                    int threads) {
  int k = C.k(), n = C.n();
  if (r < 1 || r > k)
    throw std::invalid_argument("hamming weight rank out of range");
  long long total = gaussian_binomial(k, r, C.p);
  if (total > budget) return std::nullopt;
  const long long p = C.p;
  auto eval = [&](const SubspaceStream& st) -> std::optional<long long> {
    long long weight = 0;
    for (int j = 0; j < n; ++j) {
      bool hit = false;
      for (int i = 0; i < r && !hit; ++i) {
        long long acc = 0;
        for (int t = 0; t < k; ++t)
          acc += st.matrix()[i * k + t] * C.gen[t][j];
        hit = acc % p != 0;
      }
      if (hit) ++weight;
    }
    return weight;
  };
  auto make = [&] { return SubspaceStream(p, k, r); };
  return scan_extremum(make, total, eval, /*maximize=*/false, threads).best;
}

std::vector<std::optional<long long>> weight_hierarchy(const EvaluationCode& C,
                                                       long long budget,
                                                       int threads) {
  std::vector<std::optional<long long>> out;
  for (int r = 1; r <= C.k(); ++r)
    out.push_back(generalized_hamming_weight(C, r, budget, threads));
  return out;
}

long long allforms_hyp_oracle(const ProjectivePointSet& X,
                              const RingPtr<PrimeField>& ring, int d,
                              long long budget) {
  PrimeField fld(X.p);
  std::vector<Monomial> monos = degree_monomials(ring, d);
  int N = static_cast<int>(monos.size());
  int n = X.size();
  if (power_count(X.p, N) > budget)
    throw std::out_of_range("all-forms oracle budget exceeded");
  std::vector<std::vector<long long>> table;
  for (const Monomial& m : monos) {
    std::vector<long long> row(n);
    for (int j = 0; j < n; ++j) {
      long long v = 1;
      for (int i = 0; i < X.ncoords(); ++i)
        if (m.e[i] != 0) v = fld.mul(v, pow_mod(X.pts[j][i], m.e[i], fld.p));
      row[j] = v;
    }
    table.push_back(std::move(row));
  }
  long long best = 0;
  std::vector<long long> coef(N, 0);
  while (true) {
    int t = N - 1;
    while (t >= 0 && coef[t] == X.p - 1) coef[t--] = 0;
    if (t < 0) break;
    ++coef[t];
    int zeros = 0;
    for (int j = 0; j < n; ++j) {
      long long acc = 0;
      for (int i = 0; i < N; ++i) acc += coef[i] * table[i][j];
      if (acc % X.p == 0) ++zeros;
    }
    if (zeros >= 1 && zeros < n) best = std::max<long long>(best, zeros);
  }
  return best;
}

}  // namespace gmd
