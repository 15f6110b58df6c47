#include <random>

#include "doctest.h"
#include "gmd/hilbert.hpp"
#include "gmd/monomial_ideal.hpp"

using namespace gmd;

namespace {

Monomial mono(std::initializer_list<int> exps) {
  Monomial m;
  int i = 0;
  for (int e : exps) m.e[i++] = static_cast<uint16_t>(e);
  return m;
}

MonomialIdeal random_mono_ideal(std::mt19937& rng, int nvars, int maxgens, int maxexp) {
  std::uniform_int_distribution<int> ng(1, maxgens), ex(0, maxexp);
  std::vector<Monomial> g;
  int k = ng(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m;
    int total = 0;
    for (int v = 0; v < nvars; ++v) {
      m.e[v] = static_cast<uint16_t>(ex(rng));
      total += m.e[v];
    }
    if (total == 0) continue;  // skip the unit
    g.push_back(m);
  }
  return MonomialIdeal(nvars, std::move(g));
}

}  // namespace

TEST_CASE("minimal generating set") {
  MonomialIdeal m(3, {mono({2, 0, 0}), mono({2, 1, 0}), mono({0, 1, 1}), mono({1, 1, 1})});
  CHECK(m.gens().size() == 2);
  CHECK(m.contains(mono({2, 1, 0})));
  CHECK(!m.contains(mono({1, 1, 0})));
  CHECK(m == MonomialIdeal(3, {mono({0, 1, 1}), mono({2, 0, 0})}));
}

TEST_CASE("monomial colon and intersection") {
  MonomialIdeal m(3, {mono({3, 0, 0}), mono({0, 1, 1})});  // (t1^3, t2 t3)
  CHECK(mono_colon(m, mono({0, 1, 0})) == MonomialIdeal(3, {mono({3, 0, 0}), mono({0, 0, 1})}));
  CHECK(mono_colon(m, mono({3, 0, 0})) == MonomialIdeal(3, {mono({0, 0, 0})}));
  MonomialIdeal a(3, {mono({1, 0, 0})});
  MonomialIdeal b(3, {mono({0, 1, 0})});
  CHECK(mono_intersect(a, b) == MonomialIdeal(3, {mono({1, 1, 0})}));
  // (J : m) == J here, the reason the d=1,r=3 footprint family is empty
  MonomialIdeal mm(3, {mono({1, 0, 0}), mono({0, 1, 0}), mono({0, 0, 1})});
  CHECK(mono_colon(m, mm) == m);
}

TEST_CASE("irreducible decomposition and associated primes") {
  // (t1^2, t1 t2) = (t1) cap (t1^2, t2), an embedded prime at {t1,t2}
  MonomialIdeal m(2, {mono({2, 0}), mono({1, 1})});
  auto dec = irreducible_decomposition(m);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0] == MonomialIdeal(2, {mono({2, 0}), mono({0, 1})}));
  CHECK(dec[1] == MonomialIdeal(2, {mono({1, 0})}));
  auto primes = mono_associated_primes(m);
  REQUIRE(primes.size() == 2);
  CHECK(primes[0] == std::vector<int>{0});
  CHECK(primes[1] == std::vector<int>{0, 1});
  CHECK(!mono_is_unmixed(m));
  CHECK(!mono_is_radical(m));

  MonomialIdeal n(3, {mono({3, 0, 0}), mono({0, 1, 1})});
  auto pn = mono_associated_primes(n);
  REQUIRE(pn.size() == 2);
  CHECK(pn[0] == std::vector<int>{0, 1});
  CHECK(pn[1] == std::vector<int>{0, 2});
  CHECK(mono_is_unmixed(n));

  MonomialIdeal r(3, {mono({1, 1, 0}), mono({0, 1, 1})});
  CHECK(mono_is_radical(r));
}

TEST_CASE("decomposition re-intersects to the ideal") {
  std::mt19937 rng(20260814);
  for (int trial = 0; trial < 60; ++trial) {
    MonomialIdeal m = random_mono_ideal(rng, 3, 4, 3);
    if (m.is_zero() || m.is_unit()) continue;
    auto dec = irreducible_decomposition(m);
    MonomialIdeal acc = dec[0];
    for (size_t i = 1; i < dec.size(); ++i) acc = mono_intersect(acc, dec[i]);
    CHECK(acc == m);
  }
}

TEST_CASE("standard monomials in decreasing grevlex") {
  MonomialIdeal m(3, {mono({3, 0, 0}), mono({0, 1, 1})});
  MonomialOrder o = MonomialOrder::make(OrderKind::GrevLex, 3);
  auto s2 = standard_monomials(m, 2, o);
  std::vector<Monomial> expect = {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
                                  mono({1, 0, 1}), mono({0, 0, 2})};
  CHECK(s2 == expect);
  auto s3 = standard_monomials(m, 3, o);
  REQUIRE(s3.size() == 6);
  CHECK(s3[0] == mono({2, 1, 0}));  // t1^2 t2 leads
  CHECK(s3[5] == mono({0, 0, 3}));
}

TEST_CASE("hilbert data of a complete intersection of monomials") {
  MonomialIdeal m(3, {mono({3, 0, 0}), mono({0, 1, 1})});
  HilbertData hd = hilbert_data(m);
  CHECK(hd.numerator == std::vector<long long>{1, 0, -1, -1, 0, 1});
  CHECK(hd.dim == 1);
  CHECK(hd.degree == 6);
  CHECK(hd.h == std::vector<long long>{1, 2, 2, 1});
  CHECK(hd.a_invariant == 2);
  CHECK(hd.reg_index == 3);
  REQUIRE(hd.cm_regularity.has_value());
  CHECK(*hd.cm_regularity == 3);
  CHECK(hd.hilbert_function(0) == 1);
  CHECK(hd.hilbert_function(1) == 3);
  CHECK(hd.hilbert_function(2) == 5);
  CHECK(hd.hilbert_function(3) == 6);
  CHECK(hd.hilbert_function(9) == 6);
}

TEST_CASE("hilbert data edge cases") {
  MonomialIdeal zero(3, {});
  HilbertData hz = hilbert_data(zero);
  CHECK(hz.dim == 3);
  CHECK(hz.degree == 1);
  CHECK(hz.reg_index == 0);

  MonomialIdeal artin(2, {mono({2, 0}), mono({0, 3})});
  HilbertData ha = hilbert_data(artin);
  CHECK(ha.dim == 0);
  CHECK(ha.degree == 6);
  CHECK(ha.reg_index == 4);  // h-degree 3, plus one
  REQUIRE(ha.cm_regularity.has_value());
  CHECK(*ha.cm_regularity == 3);

  CHECK_THROWS(hilbert_data(MonomialIdeal(2, {mono({0, 0})})));
}

TEST_CASE("series coefficients match standard monomial counts") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal m = random_mono_ideal(rng, 4, 5, 4);
    if (m.is_unit()) continue;
    HilbertData hd = hilbert_data(m);
    for (int d = 0; d <= 9; ++d) CHECK(hd.hilbert_function(d) == count_standard_monomials(m, d));
    auto dd = dim_degree(m);
    CHECK(dd.first == hd.dim);
    CHECK(dd.second == hd.degree);
  }
}

TEST_CASE("degree is additive over top-dimensional components") {
  // two height-2 primaries in 3 variables
  MonomialIdeal q1(3, {mono({2, 0, 0}), mono({0, 3, 0})});
  MonomialIdeal q2(3, {mono({0, 4, 0}), mono({0, 0, 2})});
  MonomialIdeal m = mono_intersect(q1, q2);
  CHECK(dim_degree(m).second == dim_degree(q1).second + dim_degree(q2).second);
}
