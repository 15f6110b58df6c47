#pragma once
// Algebraic invariants of graded ideals: generalized minimum distance and
// footprint functions, hyp and Vasconcelos functions, v-numbers, and minimum
// socle degrees, together with the property bookkeeping that decides which
// computational route is legitimate for a given input.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "gmd/enumeration.hpp"
#include "gmd/groebner.hpp"
#include "gmd/hilbert.hpp"
#include "gmd/ideal.hpp"
#include "gmd/ideal_ops.hpp"
#include "gmd/monomial_ideal.hpp"
#include "gmd/points.hpp"

namespace gmd {

// What we know about a structural property and how we know it.
enum class Tri { Unknown, Yes, No, Asserted };

inline const char* tri_name(Tri t) {
  switch (t) {
    case Tri::Yes: return "verified";
    case Tri::No: return "no";
    case Tri::Asserted: return "asserted";
    default: return "unknown";
  }
}
inline bool tri_true(Tri t) { return t == Tri::Yes || t == Tri::Asserted; }

struct PropertyFlags {
  Tri unmixed = Tri::Unknown;
  Tri radical = Tri::Unknown;
  Tri cohen_macaulay = Tri::Unknown;
  Tri complete_intersection = Tri::Unknown;
  Tri linear_primes = Tri::Unknown;
};

template <class F>
struct IdealContext {
  RingPtr<F> ring;
  Ideal<F> I;
  HilbertData hilbert;                        // of S/I, via in(I)
  std::vector<Polynomial<F>> min_gens;
  std::optional<MonomialIdeal> monomial;      // set when I itself is monomial
  std::vector<std::vector<int>> mono_primes;  // variable supports, monomial case
  std::vector<Ideal<F>> assoc_primes;         // known associated primes
  std::optional<ProjectivePointSet> points;   // set when I = I(X)
  PropertyFlags flags;
};

template <class F>
IdealContext<F> build_context(const RingPtr<F>& ring,
                              std::vector<Polynomial<F>> gens,
                              const std::vector<std::vector<Polynomial<F>>>& asserted_primes = {},
                              const PropertyFlags& asserted = {}) {
  IdealContext<F> ctx;
  ctx.ring = ring;
  ctx.I = Ideal<F>(ring, std::move(gens));
  const MonomialIdeal& init = ctx.I.initial_ideal();
  if (init.is_unit()) throw std::invalid_argument("unit ideal");
  ctx.hilbert = hilbert_data(init);
  ctx.flags = asserted;
  ctx.min_gens = minimal_generators(ctx.I);

  if (auto mono = as_monomial_ideal(ctx.I); mono && !mono->is_zero()) {
    ctx.monomial = *mono;
    ctx.mono_primes = mono_associated_primes(*mono);
    ctx.flags.unmixed = mono_is_unmixed(*mono) ? Tri::Yes : Tri::No;
    ctx.flags.radical = mono_is_radical(*mono) ? Tri::Yes : Tri::No;
    ctx.flags.linear_primes = Tri::Yes;
    for (const auto& support : ctx.mono_primes) {
      std::vector<Polynomial<F>> pg;
      for (int v : support) pg.push_back(Polynomial<F>::variable(ring, v));
      ctx.assoc_primes.emplace_back(ring, std::move(pg));
    }
  }

  for (const auto& block : asserted_primes) {
    Ideal<F> P(ring, block);
    bool known = false;
    for (const auto& q : ctx.assoc_primes) known = known || ideal_equal(q, P);
    if (!known) ctx.assoc_primes.push_back(std::move(P));
    if (ctx.flags.linear_primes == Tri::Unknown) ctx.flags.linear_primes = Tri::Asserted;
  }

  int height = ring->nvars() - ctx.hilbert.dim;
  if (!ctx.I.is_zero())
    ctx.flags.complete_intersection =
        static_cast<int>(ctx.min_gens.size()) == height ? Tri::Yes : Tri::No;

  if (ctx.hilbert.cm_regularity) ctx.flags.cohen_macaulay = Tri::Yes;
  if (ctx.flags.complete_intersection == Tri::Yes) {
    ctx.flags.cohen_macaulay = Tri::Yes;
    if (!ctx.hilbert.cm_regularity) {
      ctx.hilbert.cm_regularity = static_cast<int>(ctx.hilbert.h.size()) - 1;
      ctx.hilbert.cm_route = "complete intersection";
    }
  }
  if (ctx.flags.cohen_macaulay == Tri::Yes && ctx.flags.unmixed == Tri::Unknown)
    ctx.flags.unmixed = Tri::Yes;
  return ctx;
}

inline IdealContext<PrimeField> build_points_context(const RingPtr<PrimeField>& ring,
                                                     const ProjectivePointSet& X) {
  IdealContext<PrimeField> ctx;
  ctx.ring = ring;
  ctx.I = vanishing_ideal(ring, X);
  ctx.hilbert = hilbert_data(ctx.I.initial_ideal());
  ctx.min_gens = minimal_generators(ctx.I);
  ctx.points = X;
  for (const auto& P : X.pts) ctx.assoc_primes.push_back(point_prime(ring, P));
  ctx.flags.unmixed = Tri::Yes;
  ctx.flags.radical = Tri::Yes;
  ctx.flags.cohen_macaulay = Tri::Yes;
  ctx.flags.linear_primes = Tri::Yes;
  int height = ring->nvars() - ctx.hilbert.dim;
  ctx.flags.complete_intersection =
      static_cast<int>(ctx.min_gens.size()) == height ? Tri::Yes : Tri::No;
  if (!ctx.hilbert.cm_regularity) {
    ctx.hilbert.cm_regularity = static_cast<int>(ctx.hilbert.h.size()) - 1;
    ctx.hilbert.cm_route = "vanishing ideal of points";
  }
  return ctx;
}

enum class CellStatus { Value, Infinity, Skipped, NA };

struct Cell {
  CellStatus status = CellStatus::NA;
  long long value = 0;
  bool family_empty = false;  // no candidate qualified; value is the convention
  long long candidates = 0;
  std::string note;
  std::vector<std::string> witness;
};

struct GmdOptions {
  long long budget = 10'000'000;
  int threads = 0;
  bool force_generic = false;  // bypass the points/theorem fast paths
  bool want_witness = false;
};

struct DeltaHyp {
  Cell delta, hyp;
};

namespace detail {

template <class F>
std::vector<Polynomial<F>> family_from_matrix(const RingPtr<F>& ring,
                                              const std::vector<int64_t>& mat,
                                              int r, int K,
                                              const std::vector<Monomial>& stds) {
  std::vector<Polynomial<F>> fam;
  fam.reserve(r);
  for (int i = 0; i < r; ++i) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (int j = 0; j < K; ++j)
      if (mat[i * K + j] != 0)
        terms.push_back({ring->field.from_int(mat[i * K + j]), stds[j]});
    fam.emplace_back(ring, std::move(terms));
  }
  return fam;
}

}  // namespace detail

// fp_I(d,r): subsets of degree-d standard monomials of in(I), qualified when
// the colon moves the initial ideal, scored by deg S/(in(I), F).
template <class F>
Cell footprint_cell(const IdealContext<F>& ctx, int d, int r,
                    const GmdOptions& opts = {}) {
  if (d < 1 || r < 1) throw std::invalid_argument("footprint needs d, r >= 1");
  const MonomialIdeal& init = ctx.monomial ? *ctx.monomial : ctx.I.initial_ideal();
  Cell cell;
  long long K = count_standard_monomials(init, d);
  if (r > K) {
    cell.status = CellStatus::Infinity;
    return cell;
  }
  long long total = binomial_count(K, r);
  if (total > opts.budget) {
    cell.status = CellStatus::Skipped;
    cell.candidates = total;
    cell.note = "candidate count exceeds budget";
    return cell;
  }
  std::vector<Monomial> stds = standard_monomials(init, d, ctx.ring->order);
  int nv = init.nvars();
  auto eval = [&](const SubsetStream& st) -> std::optional<long long> {
    std::vector<Monomial> fam;
    fam.reserve(r);
    for (int c : st.current()) fam.push_back(stds[c]);
    if (mono_colon(init, MonomialIdeal(nv, fam)) == init) return std::nullopt;
    return dim_degree(mono_sum(init, fam)).second;
  };
  auto make = [&] { return SubsetStream(static_cast<int>(K), r); };
  ScanOutcome out = scan_extremum(make, total, eval, /*maximize=*/true, opts.threads);
  cell.status = CellStatus::Value;
  cell.candidates = total;
  cell.family_empty = !out.any;
  cell.value = ctx.hilbert.degree - (out.any ? out.best : 0);
  if (opts.want_witness && out.any) {
    SubsetStream st(static_cast<int>(K), r);
    st.seek(out.best_index);
    for (int c : st.current())
      cell.witness.push_back(ctx.ring->mono_str(stds[c]));
  }
  return cell;
}

// delta_I(d,r) and hyp_I(d,r) from one scan over the candidate families.
template <class F>
DeltaHyp delta_hyp_cell(const IdealContext<F>& ctx, int d, int r,
                        const GmdOptions& opts = {}) {
  if (d < 1 || r < 1) throw std::invalid_argument("delta needs d, r >= 1");
  const MonomialIdeal& init = ctx.monomial ? *ctx.monomial : ctx.I.initial_ideal();
  const long long deg = ctx.hilbert.degree;
  DeltaHyp out;
  long long K = count_standard_monomials(init, d);
  if (r > K) {
    out.delta.status = out.hyp.status = CellStatus::Infinity;
    return out;
  }

  // Unmixed monomial ideals attain the footprint bound, so the enumeration
  // is not needed there.
  if (!opts.force_generic && ctx.monomial && ctx.flags.unmixed == Tri::Yes) {
    Cell fp = footprint_cell(ctx, d, r, opts);
    out.delta = fp;
    out.hyp = fp;
    if (fp.status == CellStatus::Value) {
      out.hyp.value = deg - fp.value;
      out.delta.note = out.hyp.note = "unmixed monomial ideal: delta = footprint";
    }
    return out;
  }

  if constexpr (std::is_same_v<F, PrimeField>) {
    const long long p = ctx.ring->field.p;
    long long total = gaussian_binomial(K, r, p);
    if (total > opts.budget) {
      out.delta.status = out.hyp.status = CellStatus::Skipped;
      out.delta.candidates = out.hyp.candidates = total;
      out.delta.note = out.hyp.note = "candidate count exceeds budget";
      return out;
    }
    std::vector<Monomial> stds = standard_monomials(init, d, ctx.ring->order);
    ScanOutcome scan;
    std::string route;

    if (ctx.points && !opts.force_generic) {
      // Radical vanishing ideal: deg S/(I,F) is the number of common zeros,
      // and the family qualifies exactly when one exists.
      route = "points";
      std::vector<Polynomial<PrimeField>> sp;
      for (const Monomial& m : stds)
        sp.push_back(Polynomial<PrimeField>::monomial(ctx.ring, m, 1));
      auto table = eval_table(sp, *ctx.points);
      int n = ctx.points->size();
      auto eval = [&](const SubspaceStream& st) -> std::optional<long long> {
        long long zeros = 0;
        for (int j = 0; j < n; ++j) {
          bool allz = true;
          for (int i = 0; i < r && allz; ++i) {
            long long acc = 0;
            for (int t = 0; t < K; ++t)
              acc += st.matrix()[i * K + t] * table[t][j];
            allz = acc % p == 0;
          }
          if (allz) ++zeros;
        }
        if (zeros == 0) return std::nullopt;
        return zeros;
      };
      auto make = [&] { return SubspaceStream(p, static_cast<int>(K), r); };
      scan = scan_extremum(make, total, eval, /*maximize=*/true, opts.threads);
    } else if (tri_true(ctx.flags.unmixed)) {
      // Unmixed I: (I : F) != I iff F lies in an associated prime iff the
      // height of (I, F) stays put, which the Hilbert data already shows.
      route = "unmixed height check";
      const auto& gb = ctx.I.groebner();
      auto eval = [&](const SubspaceStream& st) -> std::optional<long long> {
        auto fam = detail::family_from_matrix(ctx.ring, st.matrix(), r,
                                              static_cast<int>(K), stds);
        std::vector<Polynomial<PrimeField>> gens = gb;
        gens.insert(gens.end(), fam.begin(), fam.end());
        Ideal<PrimeField> J(ctx.ring, std::move(gens));
        auto [jdim, jdeg] = dim_degree(J.initial_ideal());
        if (jdim != ctx.hilbert.dim) return std::nullopt;
        return jdeg;
      };
      auto make = [&] { return SubspaceStream(p, static_cast<int>(K), r); };
      scan = scan_extremum(make, total, eval, /*maximize=*/true, opts.threads);
    } else {
      // No structural shortcut: test (I : F) != I literally.
      route = "colon test";
      const auto& gb = ctx.I.groebner();
      auto eval = [&](const SubspaceStream& st) -> std::optional<long long> {
        auto fam = detail::family_from_matrix(ctx.ring, st.matrix(), r,
                                              static_cast<int>(K), stds);
        Ideal<PrimeField> famI(ctx.ring, fam);
        if (ideal_equal(colon(ctx.I, famI), ctx.I)) return std::nullopt;
        std::vector<Polynomial<PrimeField>> gens = gb;
        gens.insert(gens.end(), fam.begin(), fam.end());
        Ideal<PrimeField> J(ctx.ring, std::move(gens));
        return dim_degree(J.initial_ideal()).second;
      };
      auto make = [&] { return SubspaceStream(p, static_cast<int>(K), r); };
      scan = scan_extremum(make, total, eval, /*maximize=*/true, opts.threads);
    }

    out.delta.status = out.hyp.status = CellStatus::Value;
    out.delta.candidates = out.hyp.candidates = total;
    out.delta.family_empty = out.hyp.family_empty = !scan.any;
    out.delta.value = deg - (scan.any ? scan.best : 0);
    out.hyp.value = scan.any ? scan.best : 0;
    out.delta.note = out.hyp.note = route;
    if (opts.want_witness && scan.any) {
      SubspaceStream st(p, static_cast<int>(K), r);
      st.seek(scan.best_index);
      auto fam = detail::family_from_matrix(ctx.ring, st.matrix(), r,
                                            static_cast<int>(K), stds);
      for (const auto& f : fam) out.delta.witness.push_back(f.str());
      out.hyp.witness = out.delta.witness;
    }
    return out;
  } else {
    out.delta.status = out.hyp.status = CellStatus::NA;
    out.delta.note = out.hyp.note = "enumeration needs a finite field";
    return out;
  }
}

template <class F>
Cell delta_cell(const IdealContext<F>& ctx, int d, int r,
                const GmdOptions& opts = {}) {
  return delta_hyp_cell(ctx, d, r, opts).delta;
}

template <class F>
Cell hyp_cell(const IdealContext<F>& ctx, int d, int r,
              const GmdOptions& opts = {}) {
  return delta_hyp_cell(ctx, d, r, opts).hyp;
}

// Vasconcelos function: min deg S/(I : F) over qualified families.
template <class F>
Cell vasconcelos_cell(const IdealContext<F>& ctx, int d, int r,
                      const GmdOptions& opts = {}) {
  if (d < 1 || r < 1) throw std::invalid_argument("vasconcelos needs d, r >= 1");
  const MonomialIdeal& init = ctx.monomial ? *ctx.monomial : ctx.I.initial_ideal();
  Cell cell;
  long long K = count_standard_monomials(init, d);
  if (r > K) {
    cell.status = CellStatus::Infinity;
    return cell;
  }
  if (tri_true(ctx.flags.radical) && tri_true(ctx.flags.unmixed) &&
      !opts.force_generic) {
    // Radical unmixed: deg S/I = deg S/(I:F) + deg S/(I,F) for qualified F,
    // so the Vasconcelos function coincides with delta.
    cell = delta_cell(ctx, d, r, opts);
    cell.note = "radical unmixed: vasconcelos = delta";
    return cell;
  }
  if constexpr (std::is_same_v<F, PrimeField>) {
    const long long p = ctx.ring->field.p;
    long long total = gaussian_binomial(K, r, p);
    if (total > opts.budget) {
      cell.status = CellStatus::Skipped;
      cell.candidates = total;
      cell.note = "candidate count exceeds budget";
      return cell;
    }
    std::vector<Monomial> stds = standard_monomials(init, d, ctx.ring->order);
    auto eval = [&](const SubspaceStream& st) -> std::optional<long long> {
      auto fam = detail::family_from_matrix(ctx.ring, st.matrix(), r,
                                            static_cast<int>(K), stds);
      Ideal<PrimeField> cq = colon(ctx.I, Ideal<PrimeField>(ctx.ring, fam));
      if (ideal_equal(cq, ctx.I)) return std::nullopt;
      return dim_degree(cq.initial_ideal()).second;
    };
    auto make = [&] { return SubspaceStream(p, static_cast<int>(K), r); };
    ScanOutcome scan = scan_extremum(make, total, eval, /*maximize=*/false, opts.threads);
    cell.status = CellStatus::Value;
    cell.candidates = total;
    cell.family_empty = !scan.any;
    cell.value = scan.any ? scan.best : ctx.hilbert.degree;
    cell.note = "colon scan";
    return cell;
  } else {
    cell.status = CellStatus::NA;
    cell.note = "enumeration needs a finite field";
    return cell;
  }
}

struct MatrixResult {
  std::string func;
  int dmax = 0, rmax = 0;
  std::vector<std::vector<Cell>> cells;  // cells[d-1][r-1]
};

template <class F>
MatrixResult cell_matrix(const IdealContext<F>& ctx, const std::string& func,
                         int dmax, int rmax, const GmdOptions& opts = {}) {
  MatrixResult res;
  res.func = func;
  res.dmax = dmax;
  res.rmax = rmax;
  for (int d = 1; d <= dmax; ++d) {
    std::vector<Cell> row;
    if (func == "delta" || func == "hyp") {
      for (int r = 1; r <= rmax; ++r) {
        DeltaHyp dh = delta_hyp_cell(ctx, d, r, opts);
        row.push_back(func == "delta" ? dh.delta : dh.hyp);
      }
    } else if (func == "fp") {
      for (int r = 1; r <= rmax; ++r) row.push_back(footprint_cell(ctx, d, r, opts));
    } else if (func == "vasconcelos") {
      for (int r = 1; r <= rmax; ++r) row.push_back(vasconcelos_cell(ctx, d, r, opts));
    } else {
      throw std::invalid_argument("unknown function " + func);
    }
    res.cells.push_back(std::move(row));
  }
  return res;
}

// ---- v-numbers ----

namespace detail {

struct QuotientSeries {
  bool unit = false;
  HilbertData hd;
  long long H(int d) const { return unit ? 0 : hd.hilbert_function(d); }
};

inline QuotientSeries series_of_mono(const MonomialIdeal& m) {
  QuotientSeries qs;
  if (m.is_unit()) {
    qs.unit = true;
    return qs;
  }
  qs.hd = hilbert_data(m);
  return qs;
}

template <class F>
QuotientSeries series_of(const Ideal<F>& I) {
  const MonomialIdeal& init = I.initial_ideal();
  return series_of_mono(init);
}

}  // namespace detail

struct VNumberReport {
  std::optional<long long> v;
  std::vector<std::string> prime_names;
  std::vector<long long> local;  // aligned with prime_names
  std::string note;
};

// v-number via the unmixed characterization v_p(I) = alpha((I : p)/I): the
// first degree where the Hilbert functions of S/(I:p) and S/I part ways.
template <class F>
VNumberReport v_number(const IdealContext<F>& ctx) {
  VNumberReport rep;
  const HilbertData& hd = ctx.hilbert;
  if (hd.dim == 0 && hd.hilbert_function(1) == 0) {
    rep.v = 0;
    rep.note = "maximal ideal";
    return rep;
  }
  if (!tri_true(ctx.flags.unmixed)) {
    rep.note = "needs an unmixed ideal with known associated primes";
    return rep;
  }
  if (ctx.assoc_primes.empty()) {
    rep.note = "associated primes unavailable";
    return rep;
  }
  int cap = std::max(64, hd.reg_index * 2 + 8);
  for (size_t pi = 0; pi < ctx.assoc_primes.size(); ++pi) {
    detail::QuotientSeries qs;
    if (ctx.monomial && pi < ctx.mono_primes.size()) {
      std::vector<Monomial> pg;
      for (int v : ctx.mono_primes[pi]) pg.push_back(Monomial::var(v, 1));
      MonomialIdeal Ip = mono_colon(*ctx.monomial, MonomialIdeal(ctx.monomial->nvars(), pg));
      if (Ip == *ctx.monomial) continue;  // not an associated prime after all
      qs = detail::series_of_mono(Ip);
    } else {
      Ideal<F> Ip = colon(ctx.I, ctx.assoc_primes[pi]);
      if (ideal_equal(Ip, ctx.I)) continue;
      qs = detail::series_of(Ip);
    }
    long long vp = -1;
    for (int d = 1; d <= cap; ++d) {
      if (qs.H(d) < hd.hilbert_function(d)) {
        vp = d;
        break;
      }
    }
    if (vp < 0) throw std::logic_error("v-number search exceeded its cap");
    std::string name = "(";
    const auto& pgens = ctx.assoc_primes[pi].gens();
    for (size_t j = 0; j < pgens.size(); ++j)
      name += (j ? "," : "") + pgens[j].str();
    name += ")";
    rep.prime_names.push_back(name);
    rep.local.push_back(vp);
  }
  if (rep.local.empty()) {
    rep.note = "no supplied prime moves the ideal under colon";
    return rep;
  }
  rep.v = *std::min_element(rep.local.begin(), rep.local.end());
  return rep;
}

// ---- regular linear forms and socle degrees ----

inline std::vector<std::vector<long long>> linear_coeff_candidates(const PrimeField& f, int n) {
  return projective_space_points(f.p, n - 1);
}

inline std::vector<std::vector<long long>> linear_coeff_candidates(const RationalField&, int n) {
  std::vector<std::vector<long long>> out;
  out.emplace_back(n, 1);
  for (long long lim = 1; lim <= 2; ++lim) {
    std::vector<long long> c(n, 0);
    while (true) {
      int t = n - 1;
      while (t >= 0 && c[t] == lim) c[t--] = 0;
      if (t < 0) break;
      ++c[t];
      bool zero = true, fresh = false;
      for (long long x : c) {
        zero = zero && x == 0;
        fresh = fresh || x == lim;
      }
      if (!zero && (lim == 1 ? c != std::vector<long long>(n, 1) : fresh))
        out.push_back(c);
    }
  }
  return out;
}

template <class F>
std::optional<Polynomial<F>> find_regular_linear_form(
    const RingPtr<F>& ring, const Ideal<F>& I,
    const ProjectivePointSet* X = nullptr) {
  int n = ring->nvars();
  for (const auto& coeffs : linear_coeff_candidates(ring->field, n)) {
    Polynomial<F> h = Polynomial<F>::zero(ring);
    for (int i = 0; i < n; ++i)
      if (coeffs[i] != 0)
        h = h + Polynomial<F>::variable(ring, i).scaled(ring->field.from_int(coeffs[i]));
    bool ok;
    if (X) {
      ok = true;
      if constexpr (std::is_same_v<F, PrimeField>) {
        for (const auto& P : X->pts) ok = ok && eval_at_point(h, P) != 0;
      }
    } else {
      ok = is_regular_element(I, h);
    }
    if (ok) return h;
  }
  return std::nullopt;
}

struct SocleReport {
  std::optional<long long> s;
  std::string route;
};

// Minimum socle degree of an Artinian quotient: the first degree where
// multiplication by every variable has a common kernel vector.
template <class F>
long long artinian_min_socle_degree(const Ideal<F>& I) {
  using Elem = typename F::Elem;
  const RingPtr<F>& ring = I.ring();
  const F& fld = ring->field;
  const auto& gb = I.groebner();
  const MonomialIdeal& init = I.initial_ideal();
  HilbertData hd = hilbert_data(init);
  if (hd.dim != 0) throw std::invalid_argument("socle routine needs dim 0");
  int top = hd.reg_index - 1;
  for (int d = 0; d <= top; ++d) {
    std::vector<Monomial> Bd = standard_monomials(init, d, ring->order);
    std::vector<Monomial> Bd1 = standard_monomials(init, d + 1, ring->order);
    std::map<Monomial, int> row_of;
    for (size_t j = 0; j < Bd1.size(); ++j) row_of[Bd1[j]] = static_cast<int>(j);
    size_t nrows = ring->nvars() * Bd1.size();
    std::vector<std::vector<Elem>> M(nrows, std::vector<Elem>(Bd.size(), fld.zero()));
    for (size_t j = 0; j < Bd.size(); ++j) {
      for (int i = 0; i < ring->nvars(); ++i) {
        Polynomial<F> f = normal_form(
            Polynomial<F>::monomial(ring, mono_mul(Bd[j], Monomial::var(i, 1), ring->nvars()), fld.one()),
            gb);
        for (const auto& t : f.terms())
          M[i * Bd1.size() + row_of.at(t.m)][j] = t.c;
      }
    }
    // column rank by Gaussian elimination
    size_t rank = 0;
    for (size_t col = 0; col < Bd.size() && rank < nrows; ++col) {
      size_t pivot = rank;
      while (pivot < nrows && fld.is_zero(M[pivot][col])) ++pivot;
      if (pivot == nrows) continue;
      std::swap(M[rank], M[pivot]);
      Elem inv = fld.inv(M[rank][col]);
      for (size_t j = col; j < Bd.size(); ++j) M[rank][j] = fld.mul(M[rank][j], inv);
      for (size_t i = 0; i < nrows; ++i) {
        if (i == rank || fld.is_zero(M[i][col])) continue;
        Elem factor = M[i][col];
        for (size_t j = col; j < Bd.size(); ++j)
          M[i][j] = fld.sub(M[i][j], fld.mul(factor, M[rank][j]));
      }
      ++rank;
    }
    if (rank < Bd.size()) return d;  // nontrivial kernel: socle in degree d
  }
  throw std::logic_error("socle search walked past the top degree");
}

// s(I) via an Artinian reduction by regular linear forms (valid when S/I is
// Cohen-Macaulay; the reduction preserves the socle degrees).
template <class F>
SocleReport socle_degree(const IdealContext<F>& ctx) {
  SocleReport rep;
  if (ctx.hilbert.dim == 0) {
    rep.s = artinian_min_socle_degree(ctx.I);
    rep.route = "dim 0 socle";
    return rep;
  }
  if (!tri_true(ctx.flags.cohen_macaulay)) {
    rep.route = "needs a Cohen-Macaulay quotient";
    return rep;
  }
  RingPtr<F> R = ctx.ring;
  Ideal<F> J = ctx.I;
  const ProjectivePointSet* X = ctx.points ? &*ctx.points : nullptr;
  std::string used;
  for (int step = 0; step < ctx.hilbert.dim; ++step) {
    auto h = find_regular_linear_form(R, J, X);
    X = nullptr;  // after one substitution the point description is stale
    if (!h) {
      rep.route = "no regular linear form found";
      return rep;
    }
    used += (used.empty() ? "" : ", ") + h->str();
    int k = -1;
    for (const auto& t : h->terms())
      for (int i = 0; i < R->nvars(); ++i)
        if (t.m.e[i] > 0) k = std::max(k, i);
    typename F::Elem ck = R->field.zero();
    for (const auto& t : h->terms())
      if (t.m.e[k] > 0) ck = t.c;
    std::vector<std::string> names;
    for (int i = 0; i < R->nvars(); ++i)
      if (i != k) names.push_back(R->vars[i]);
    RingPtr<F> target = make_ring(R->field, names, R->order.kind);
    // t_k maps to -(h - ck t_k)/ck, every other variable to itself
    std::vector<Polynomial<F>> images;
    for (int i = 0; i < R->nvars(); ++i) {
      if (i != k) {
        images.push_back(Polynomial<F>::variable(target, i < k ? i : i - 1));
        continue;
      }
      Polynomial<F> img = Polynomial<F>::zero(target);
      for (const auto& t : h->terms()) {
        if (t.m.e[k] > 0) continue;
        int vi = -1;
        for (int vv = 0; vv < R->nvars(); ++vv)
          if (t.m.e[vv] > 0) vi = vv;
        img = img + Polynomial<F>::variable(target, vi < k ? vi : vi - 1)
                        .scaled(R->field.neg(R->field.div(t.c, ck)));
      }
      images.push_back(img);
    }
    std::vector<Polynomial<F>> mapped;
    for (const auto& g : J.gens()) {
      Polynomial<F> mg = apply_ring_map(g, target, images);
      if (!mg.is_zero()) mapped.push_back(mg);
    }
    J = Ideal<F>(target, std::move(mapped));
    R = target;
  }
  rep.s = artinian_min_socle_degree(J);
  rep.route = "artinian reduction by " + used;
  return rep;
}

// Regularity of delta: the first d with delta_I(d) = 1.
template <class F>
std::optional<int> reg_delta(const IdealContext<F>& ctx, const GmdOptions& opts = {},
                             int cap = 0) {
  if (cap <= 0) cap = ctx.hilbert.reg_index + 4;
  for (int d = 1; d <= cap; ++d) {
    Cell c = delta_cell(ctx, d, 1, opts);
    if (c.status != CellStatus::Value) return std::nullopt;
    if (c.value == 1) return d;
  }
  return std::nullopt;
}

}  // namespace gmd
