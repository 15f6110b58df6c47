#include "gmd/invariants.hpp"

#include <map>
#include <string>

#include "doctest.h"
#include "gmd/parse.hpp"

using namespace gmd;

namespace {

template <class F>
std::vector<Polynomial<F>> polys(const RingPtr<F>& ring,
                                 std::initializer_list<const char*> texts) {
  std::vector<Polynomial<F>> out;
  for (const char* t : texts) out.push_back(parse_polynomial(ring, t));
  return out;
}

long long val(const Cell& c) {
  REQUIRE(c.status == CellStatus::Value);
  return c.value;
}

ProjectivePointSet ten_points() {
  return make_point_set(3, 2,
                        {{1, 0, 1},
                         {1, 0, 0},
                         {1, 0, 2},
                         {1, 1, 0},
                         {1, 1, 1},
                         {1, 1, 2},
                         {0, 0, 1},
                         {0, 1, 0},
                         {0, 1, 1},
                         {0, 1, 2}});
}

}  // namespace

TEST_CASE("footprint matrix of a monomial ideal") {
  auto R = make_ring(RationalField{}, {"t1", "t2", "t3"});
  auto ctx = build_context(R, polys(R, {"t1^3", "t2*t3"}));
  CHECK(ctx.flags.unmixed == Tri::Yes);
  CHECK(ctx.flags.radical == Tri::No);
  CHECK(tri_true(ctx.flags.cohen_macaulay));
  CHECK(ctx.hilbert.dim == 1);
  CHECK(ctx.hilbert.degree == 6);

  long long want[3][6] = {{3, 5, 6, -1, -1, -1},
                          {2, 3, 4, 5, 6, -1},
                          {1, 2, 3, 4, 5, 6}};
  MatrixResult fp = cell_matrix(ctx, "fp", 3, 6);
  MatrixResult dl = cell_matrix(ctx, "delta", 3, 6);
  for (int d = 1; d <= 3; ++d) {
    for (int r = 1; r <= 6; ++r) {
      const Cell& f = fp.cells[d - 1][r - 1];
      const Cell& g = dl.cells[d - 1][r - 1];
      if (want[d - 1][r - 1] < 0) {
        CHECK(f.status == CellStatus::Infinity);
        CHECK(g.status == CellStatus::Infinity);
      } else {
        CHECK(val(f) == want[d - 1][r - 1]);
        CHECK(val(g) == want[d - 1][r - 1]);
      }
    }
  }
  CHECK(dl.cells[0][0].note == "unmixed monomial ideal: delta = footprint");
  CHECK(fp.cells[0][2].family_empty);  // (J : (t1,t2,t3)) = J

  GmdOptions w;
  w.want_witness = true;
  Cell c = footprint_cell(ctx, 3, 4, w);
  CHECK(val(c) == 4);
  CHECK(c.witness.size() == 4);
}

TEST_CASE("enumerated delta agrees with the footprint on an unmixed monomial ideal") {
  auto R = make_ring(PrimeField(3), {"t1", "t2", "t3"});
  auto ctx = build_context(R, polys(R, {"t1^3", "t2*t3"}));
  GmdOptions generic;
  generic.force_generic = true;
  long long row1[3] = {3, 5, 6};
  for (int r = 1; r <= 3; ++r) {
    DeltaHyp dh = delta_hyp_cell(ctx, 1, r, generic);
    CHECK(val(dh.delta) == row1[r - 1]);
    CHECK(dh.delta.note == "unmixed height check");
    CHECK(val(dh.hyp) == 6 - row1[r - 1]);
    CHECK(val(footprint_cell(ctx, 1, r)) == row1[r - 1]);
  }
  // F spanning S_1 does not qualify, so the cell falls back to the degree
  DeltaHyp top = delta_hyp_cell(ctx, 1, 3, generic);
  CHECK(top.delta.family_empty);
  CHECK(val(top.hyp) == 0);
  Cell d22 = delta_cell(ctx, 2, 2, generic);
  CHECK(val(d22) == 3);
  CHECK(d22.candidates == 1210);
  CHECK(val(footprint_cell(ctx, 2, 2)) == 3);
}

TEST_CASE("determinantal toric example over GF(3)") {
  auto R = make_ring(PrimeField(3), {"t1", "t2", "t3", "t4", "t5", "t6"});
  auto ctx = build_context(R, polys(R, {"t1*t6 - t3*t4", "t2*t6 - t3*t5"}));
  CHECK(ctx.flags.complete_intersection == Tri::Yes);
  CHECK(tri_true(ctx.flags.cohen_macaulay));
  CHECK(tri_true(ctx.flags.unmixed));
  CHECK(ctx.hilbert.dim == 4);
  CHECK(ctx.hilbert.degree == 4);
  CHECK(ctx.hilbert.cm_regularity.value_or(-1) == 2);
  CHECK(ctx.hilbert.hilbert_function(1) == 6);
  CHECK(ctx.hilbert.hilbert_function(2) == 19);

  long long fp1[6] = {1, 3, 4, 4, 4, 4};
  for (int r = 1; r <= 6; ++r) CHECK(val(footprint_cell(ctx, 1, r)) == fp1[r - 1]);
  CHECK(footprint_cell(ctx, 1, 7).status == CellStatus::Infinity);
  long long fp2[7] = {1, 1, 1, 1, 2, 3, 3};
  for (int r = 1; r <= 7; ++r) CHECK(val(footprint_cell(ctx, 2, r)) == fp2[r - 1]);

  Cell d11 = delta_cell(ctx, 1, 1);
  CHECK(val(d11) == 3);
  CHECK(d11.note == "unmixed height check");
  CHECK(d11.candidates == 364);
}

TEST_CASE("rational coefficients fall back honestly") {
  auto R = make_ring(RationalField{}, {"t1", "t2", "t3", "t4", "t5", "t6"});
  auto ctx = build_context(R, polys(R, {"t1*t6 - t3*t4", "t2*t6 - t3*t5"}));
  Cell c = delta_cell(ctx, 1, 1);
  CHECK(c.status == CellStatus::NA);
  CHECK(c.note == "enumeration needs a finite field");
  CHECK(val(footprint_cell(ctx, 1, 1)) == 1);
}

TEST_CASE("v-number and socle of an intersection of primary monomial ideals") {
  auto R = make_ring(RationalField{}, {"t1", "t2", "t3", "t4"});
  auto mk = [](std::initializer_list<std::initializer_list<int>> exps) {
    std::vector<Monomial> g;
    for (auto row : exps) {
      Monomial m;
      int i = 0;
      for (int e : row) m.e[i++] = static_cast<uint16_t>(e);
      g.push_back(m);
    }
    return MonomialIdeal(4, std::move(g));
  };
  MonomialIdeal q1 = mk({{0, 10, 0, 0}, {0, 0, 9, 0}, {0, 0, 0, 4}, {0, 1, 1, 3}});
  MonomialIdeal q2 = mk({{4, 0, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 3}, {1, 0, 1, 2}});
  MonomialIdeal q3 = mk({{4, 0, 0, 0}, {0, 5, 0, 0}, {0, 0, 0, 3}});
  MonomialIdeal q4 = mk({{3, 0, 0, 0}, {0, 5, 0, 0}, {0, 0, 10, 0}});
  MonomialIdeal m = mono_intersect(mono_intersect(q1, q2), mono_intersect(q3, q4));

  std::vector<Polynomial<RationalField>> gens;
  for (const auto& mo : m.gens())
    gens.push_back(Polynomial<RationalField>::monomial(R, mo, RationalField{}.one()));
  auto ctx = build_context(R, gens);
  CHECK(ctx.flags.unmixed == Tri::Yes);
  CHECK(ctx.hilbert.dim == 1);
  CHECK(ctx.hilbert.cm_regularity.value_or(-1) == 19);
  CHECK(ctx.mono_primes.size() == 4);

  VNumberReport rep = v_number(ctx);
  std::map<std::string, long long> locals;
  for (size_t i = 0; i < rep.prime_names.size(); ++i)
    locals[rep.prime_names[i]] = rep.local[i];
  std::map<std::string, long long> want = {{"(t2,t3,t4)", 12},
                                           {"(t1,t3,t4)", 15},
                                           {"(t1,t2,t4)", 18},
                                           {"(t1,t2,t3)", 18}};
  CHECK(locals == want);
  CHECK(rep.v.value_or(-1) == 12);

  SocleReport soc = socle_degree(ctx);
  CHECK(soc.s.value_or(-1) == 10);
  CHECK(soc.route == "artinian reduction by t1 + t2 + t3 + t4");
}

TEST_CASE("ten projective points over GF(3)") {
  auto R = make_ring(PrimeField(3), {"t1", "t2", "t3"});
  auto ctx = build_points_context(R, ten_points());
  CHECK(ctx.hilbert.degree == 10);
  CHECK(ctx.hilbert.dim == 1);
  CHECK(ctx.hilbert.cm_regularity.value_or(-1) == 4);
  CHECK(ctx.flags.complete_intersection == Tri::No);
  CHECK(ctx.assoc_primes.size() == 10);

  long long col[4] = {6, 3, 1, 1};
  for (int d = 1; d <= 4; ++d) {
    DeltaHyp dh = delta_hyp_cell(ctx, d, 1);
    CHECK(val(dh.delta) == col[d - 1]);
    CHECK(dh.delta.note == "points");
    CHECK(val(dh.hyp) == 10 - col[d - 1]);
  }
  Cell top = delta_cell(ctx, 1, 3);
  CHECK(val(top) == 10);
  CHECK(top.family_empty);
  CHECK(delta_cell(ctx, 1, 4).status == CellStatus::Infinity);

  VNumberReport rep = v_number(ctx);
  CHECK(rep.v.value_or(-1) == 3);
  CHECK(rep.local.size() == 10);
  CHECK(reg_delta(ctx).value_or(-1) == 3);

  // no linear form avoids all ten points, so no linear Artinian reduction
  CHECK(!socle_degree(ctx).s.has_value());

  // the three qualification routes give one answer
  GmdOptions generic;
  generic.force_generic = true;
  Cell via_height = delta_cell(ctx, 1, 1, generic);
  CHECK(val(via_height) == 6);
  CHECK(via_height.note == "unmixed height check");
  IdealContext<PrimeField> blank = ctx;
  blank.flags.unmixed = Tri::Unknown;
  blank.points.reset();
  Cell via_colon = delta_cell(blank, 1, 1);
  CHECK(val(via_colon) == 6);
  CHECK(via_colon.note == "colon test");
}

TEST_CASE("colon and sum degrees diverge on a non radical ideal") {
  auto R = make_ring(PrimeField(3), {"t1", "t2"});
  auto ctx = build_context(R, polys(R, {"t1^2", "t1*t2", "t2^2"}));
  CHECK(ctx.hilbert.degree == 3);
  CHECK(ctx.flags.unmixed == Tri::Yes);
  CHECK(ctx.flags.radical == Tri::No);
  GmdOptions generic;
  generic.force_generic = true;
  CHECK(val(delta_cell(ctx, 1, 2, generic)) == 2);
  CHECK(val(delta_cell(ctx, 1, 2)) == 2);  // footprint route, same value
  Cell v12 = vasconcelos_cell(ctx, 1, 2);
  CHECK(val(v12) == 1);
  CHECK(v12.note == "colon scan");
  // at r = 1 the two functions agree without the radical hypothesis
  CHECK(val(delta_cell(ctx, 1, 1, generic)) == 1);
  CHECK(val(vasconcelos_cell(ctx, 1, 1)) == 1);
}

TEST_CASE("vasconcelos collapses to delta on radical unmixed input") {
  auto R = make_ring(PrimeField(3), {"t1", "t2", "t3"});
  auto ctx = build_points_context(R, ten_points());
  Cell v = vasconcelos_cell(ctx, 1, 1);
  CHECK(val(v) == 6);
  CHECK(v.note == "radical unmixed: vasconcelos = delta");
}

TEST_CASE("socle degrees of artinian quotients") {
  auto R = make_ring(RationalField{}, {"t1", "t2"});
  auto sq = build_context(R, polys(R, {"t1^2", "t1*t2", "t2^2"}));
  SocleReport s1 = socle_degree(sq);
  CHECK(s1.s.value_or(-1) == 1);
  CHECK(s1.route == "dim 0 socle");
  CHECK(v_number(sq).v.value_or(-1) == 1);

  auto ci = build_context(R, polys(R, {"t1^2", "t2^3"}));
  CHECK(ci.flags.complete_intersection == Tri::Yes);
  CHECK(socle_degree(ci).s.value_or(-1) == 3);

  auto mx = build_context(R, polys(R, {"t1", "t2"}));
  CHECK(v_number(mx).v.value_or(-1) == 0);
  CHECK(socle_degree(mx).s.value_or(-1) == 0);

  // dim one: reduce by t1 + t2 + t3, then read the kernel degrees
  auto R3 = make_ring(RationalField{}, {"t1", "t2", "t3"});
  auto mm = build_context(R3, polys(R3, {"t1^3", "t2*t3"}));
  SocleReport soc = socle_degree(mm);
  CHECK(soc.s.value_or(-1) == 3);
  CHECK(soc.route == "artinian reduction by t1 + t2 + t3");
}

TEST_CASE("budget skips and bad input") {
  auto R = make_ring(PrimeField(3), {"t1", "t2", "t3"});
  auto ctx = build_points_context(R, ten_points());
  GmdOptions tiny;
  tiny.budget = 1;
  Cell sk = delta_cell(ctx, 2, 1, tiny);
  CHECK(sk.status == CellStatus::Skipped);
  CHECK(sk.candidates == 364);
  CHECK(footprint_cell(ctx, 2, 2, tiny).status == CellStatus::Skipped);
  CHECK_THROWS_AS(delta_cell(ctx, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(footprint_cell(ctx, 1, 0), std::invalid_argument);

  GmdOptions w;
  w.want_witness = true;
  Cell d11 = delta_cell(ctx, 1, 1, w);
  CHECK(val(d11) == 6);
  CHECK(d11.witness.size() == 1);
}
