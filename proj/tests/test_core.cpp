#include <string>
#include <vector>

#include "doctest.h"
#include "gmd/field.hpp"
#include "gmd/monomial.hpp"
#include "gmd/parse.hpp"
#include "gmd/polynomial.hpp"

using namespace gmd;

namespace {

Monomial mono(std::initializer_list<int> exps) {
  Monomial m;
  int i = 0;
  for (int e : exps) m.e[i++] = static_cast<uint16_t>(e);
  return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.mul(3, 5) == 1);
  for (long long a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK_THROWS(PrimeField(6));
  CHECK_THROWS(PrimeField(1));
}

TEST_CASE("rational field arithmetic") {
  RationalField f;
  auto a = f.from_fraction(1, 3);
  auto b = f.from_fraction(1, 6);
  CHECK(f.add(a, b) == f.from_fraction(1, 2));
  CHECK(f.str(f.from_fraction(-4, 6)) == "-2/3");
  CHECK(f.mul(a, f.inv(a)) == f.one());
}

// Frozen reference: all degree-2 monomials in 3 variables listed in
// decreasing order, worked out by hand from the order definitions.
TEST_CASE("order tables for degree 2 in 3 variables") {
  auto sorted_by = [&](OrderKind k) {
    MonomialOrder o = MonomialOrder::make(k, 3);
    std::vector<Monomial> all = {mono({2, 0, 0}), mono({1, 1, 0}), mono({1, 0, 1}),
                                 mono({0, 2, 0}), mono({0, 1, 1}), mono({0, 0, 2})};
    std::sort(all.begin(), all.end(),
              [&](const Monomial& a, const Monomial& b) { return mono_cmp(a, b, o) > 0; });
    return all;
  };

  std::vector<Monomial> grevlex = {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
                                   mono({1, 0, 1}), mono({0, 1, 1}), mono({0, 0, 2})};
  std::vector<Monomial> lex = {mono({2, 0, 0}), mono({1, 1, 0}), mono({1, 0, 1}),
                               mono({0, 2, 0}), mono({0, 1, 1}), mono({0, 0, 2})};
  CHECK(sorted_by(OrderKind::GrevLex) == grevlex);
  CHECK(sorted_by(OrderKind::Lex) == lex);
  CHECK(sorted_by(OrderKind::GrLex) == lex);  // coincide in degree 2, 3 vars
}

TEST_CASE("grlex and grevlex differ in degree 3") {
  MonomialOrder grlex = MonomialOrder::make(OrderKind::GrLex, 3);
  MonomialOrder grevlex = MonomialOrder::make(OrderKind::GrevLex, 3);
  Monomial a = mono({2, 0, 1});  // t1^2 t3
  Monomial b = mono({1, 2, 0});  // t1 t2^2
  CHECK(mono_cmp(a, b, grlex) > 0);
  CHECK(mono_cmp(a, b, grevlex) < 0);
}

TEST_CASE("lex is not graded, grevlex is") {
  MonomialOrder lex = MonomialOrder::make(OrderKind::Lex, 2);
  MonomialOrder grevlex = MonomialOrder::make(OrderKind::GrevLex, 2);
  Monomial x = mono({1, 0});
  Monomial y5 = mono({0, 5});
  CHECK(mono_cmp(x, y5, lex) > 0);
  CHECK(mono_cmp(x, y5, grevlex) < 0);
}

TEST_CASE("order permutation reverses precedence") {
  MonomialOrder o = MonomialOrder::make(OrderKind::Lex, 3);
  o.perm = {2, 1, 0};  // t3 > t2 > t1
  CHECK(mono_cmp(mono({5, 0, 0}), mono({0, 0, 1}), o) < 0);
}

TEST_CASE("polynomial arithmetic over QQ and GF(2)") {
  auto rq = make_ring(RationalField{}, {"x", "y"});
  auto x = PolyQ::variable(rq, 0);
  auto y = PolyQ::variable(rq, 1);
  auto sq = (x + y) * (x + y);
  CHECK(sq.str() == "x^2 + 2*x*y + y^2");
  CHECK((sq - x * x - y * y).str() == "2*x*y");

  auto r2 = make_ring(PrimeField(2), {"x", "y"});
  auto a = PolyFp::variable(r2, 0);
  auto b = PolyFp::variable(r2, 1);
  CHECK(((a + b) * (a + b)).str() == "x^2 + y^2");
  CHECK(((a + b) + (a + b)).is_zero());
}

TEST_CASE("polynomial parser and round trip") {
  auto rq = std::get<RingPtr<RationalField>>(parse_ring_decl("ring QQ[t1,t2,t3]"));
  auto f = parse_polynomial(rq, "1/2*t1^2 - t2*t3 + 3");
  CHECK(f.degree() == 2);
  CHECK(parse_polynomial(rq, f.str()) == f);
  CHECK(parse_polynomial(rq, "t1t2^2 - t1^2t2") ==
        parse_polynomial(rq, "t1*t2^2 - t1^2*t2"));
  CHECK(parse_polynomial(rq, "2t1") == parse_polynomial(rq, "t1 + t1"));
  CHECK(parse_polynomial(rq, "t1 - t1").is_zero());

  auto rp = std::get<RingPtr<PrimeField>>(parse_ring_decl("ring GF(3)[x,y] order=lex"));
  CHECK(rp->order.kind == OrderKind::Lex);
  auto g = parse_polynomial(rp, "2*x^2 + 2*x^2 - y");
  CHECK(g.str() == "x^2 + 2*y");
  CHECK(parse_polynomial(rp, g.str()) == g);
  CHECK_THROWS_AS(parse_polynomial(rp, "1/2*x"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(rq, "t9"), ParseError);
}

TEST_CASE("ring declaration options") {
  auto r = std::get<RingPtr<RationalField>>(parse_ring_decl("ring QQ[a,b,c] order=grlex vars=c,b,a"));
  CHECK(r->order.kind == OrderKind::GrLex);
  CHECK(r->order.perm == std::vector<int>{2, 1, 0});
  CHECK_THROWS_AS(parse_ring_decl("ring GF(4)[x]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ring_decl("ring QQ[x,x]"), ParseError);
  CHECK_THROWS_AS(parse_ring_decl("ring QQ[a,b] vars=a,a"), ParseError);
}

TEST_CASE("points file parsing") {
  PointsFileData d = parse_points_file(
      "points GF(3) dim=3\n(1 : 0 : 1)\n(2 : 0 : 0)\n(0 : -1 : 2)\n");
  CHECK(d.p == 3);
  CHECK(d.points.size() == 3);
  CHECK(d.points[1] == std::vector<long long>{1, 0, 0});   // normalized
  CHECK(d.points[2] == std::vector<long long>{0, 1, 1});   // scaled by inv(2)=2
  CHECK_THROWS_AS(parse_points_file("points GF(3) dim=3\n(0:0:0)\n"), ParseError);
  CHECK_THROWS_AS(parse_points_file("points GF(3) dim=3\n(1:0:1)\n(2:0:2)\n"), ParseError);
  CHECK_THROWS_AS(parse_points_file("points GF(3) dim=3\n(1:0)\n"), ParseError);
}

TEST_CASE("ideal file parsing") {
  auto v = parse_ideal_file(
      "-- determinantal pair\n"
      "ring GF(3)[t1,t2,t3,t4,t5,t6]\n"
      "ideal:\n"
      "  t1*t6 - t3*t4,\n"
      "  t2*t6 - t3*t5\n");
  auto& d = std::get<IdealFileData<PrimeField>>(v);
  CHECK(d.gens.size() == 2);
  CHECK(d.ring->nvars() == 6);

  auto w = parse_ideal_file(
      "ring GF(3)[t1,t2,t3]\n"
      "ideal: t1*t2\n"
      "primes:\n"
      "  (t1, t2 - t3)\n"
      "  (t2)\n");
  auto& e = std::get<IdealFileData<PrimeField>>(w);
  CHECK(e.primes.size() == 2);
  CHECK(e.primes[0].size() == 2);
  CHECK_THROWS_AS(parse_ideal_file("ring QQ[x]\nideal:\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("ring QQ[x]\nideal: x\nprimes:\n  (x^2)\n"), ParseError);
}
