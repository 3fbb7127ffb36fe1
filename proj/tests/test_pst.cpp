#include <numeric>
#include <vector>

#include <doctest.h>

#include "pst/pst.hpp"

using namespace pst;

namespace {

ElementSet make_set(long long universe, std::initializer_list<long long> elems) {
  ElementSet s(universe);
  for (long long e : elems) s.insert(e);
  return s;
}

ElementSet class_union(const Group& g, std::initializer_list<long long> reps) {
  ElementSet s(g.order());
  for (long long r : reps)
    for (long long m : class_of(g, r)) s.insert(m);
  return s;
}

// Every union of nonzero unit-action classes of g.
std::vector<ElementSet> all_class_unions(const Group& g) {
  ClassPartition part = enumerate_classes(g);
  std::vector<const ElementClass*> nonzero;
  for (const ElementClass& c : part.classes)
    if (c.rep != 0) nonzero.push_back(&c);
  std::vector<ElementSet> out;
  for (uint64_t mask = 1; mask < (uint64_t{1} << nonzero.size()); ++mask) {
    ElementSet s(g.order());
    for (size_t i = 0; i < nonzero.size(); ++i)
      if (mask >> i & 1)
        for (long long m : nonzero[i]->members) s.insert(m);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_SUITE("pst") {
  TEST_CASE("2-adic valuations") {
    CHECK(Val2::of(0LL) == Val2::infinity());
    CHECK(!Val2::of(0LL).finite);
    CHECK(Val2::of(1LL) == Val2{true, 0});
    CHECK(Val2::of(8LL) == Val2{true, 3});
    CHECK(Val2::of(-8LL) == Val2{true, 3});
    CHECK(Val2::of(12LL) == Val2{true, 2});
    CHECK(Val2::of(Rational(3, 8)) == Val2{true, -3});
    CHECK(Val2::of(Rational(4, 3)) == Val2{true, 2});
    CHECK(Val2::of(Rational(0)) == Val2::infinity());
    CHECK(to_string(Val2::infinity()) == "inf");
    CHECK(to_string(Val2::of(12LL)) == "2");
    CHECK(to_string(Val2::of(Rational(3, 8))) == "-3");
  }

  TEST_CASE("time sets") {
    TimeSet empty;
    CHECK(empty.empty);
    CHECK(!empty.contains(Rational(1, 2)));
    CHECK_THROWS_AS(empty.minimum(), input_error);

    TimeSet s;
    s.empty = false;
    s.offset = Rational(1, 2);
    s.period = Rational(1);
    CHECK(s.minimum() == Rational(1, 2));
    CHECK(s.contains(Rational(1, 2)));
    CHECK(s.contains(Rational(3, 2)));
    CHECK(s.contains(Rational(101, 2)));
    CHECK(!s.contains(Rational(1)));
    CHECK(!s.contains(Rational(1, 4)));
    CHECK(!s.contains(Rational(-1, 2)));
  }

  TEST_CASE("spectral gap gcd") {
    EigenvalueTable t;
    t.degree = 2;
    t.alpha = {2, 0, -2, 0};
    CHECK(spectral_gap_gcd(t) == 2);
    t.degree = 3;
    t.alpha = {3, 3};
    CHECK(spectral_gap_gcd(t) == 0);  // every gap zero
    t.alpha = {3, -1, -1, -1};
    CHECK(spectral_gap_gcd(t) == 4);
  }

  TEST_CASE("periodicity constant preconditions") {
    Group z8({8});
    CayleyGraph nonintegral(z8, make_set(8, {1, 7}));
    CHECK_THROWS_AS(big_M(nonintegral, EigenvalueTable{}), input_error);

    CayleyGraph disconnected(z8, make_set(8, {2, 6}));
    CHECK_THROWS_AS(big_M(disconnected, eigenvalue_table(disconnected)), input_error);

    // Class of 1 in Z8 is the unit class {1,3,5,7}: alpha = (4,0,0,0,-4,0,0,0),
    // so the gap gcd is 4 even though the top gap is 8.
    CayleyGraph c8(z8, class_union(z8, {1}));
    CHECK(big_M(c8, eigenvalue_table(c8)) == 4);
  }

  TEST_CASE("period sets") {
    Group z4({4});
    CayleyGraph c4(z4, make_set(4, {1, 3}));
    TimeSet p = period_set(c4, 0);
    CHECK(!p.empty);
    CHECK(p.offset == Rational(1));
    CHECK(p.period == Rational(1));
    CHECK(p == period_set(c4, eigenvalue_table(c4), 3));

    Group z6({6});
    CayleyGraph c6(z6, make_set(6, {1, 5}));
    TimeSet q = period_set(c6, 0);
    CHECK(q.offset == Rational(2));
    CHECK(q.period == Rational(2));

    CayleyGraph k4(z4, make_set(4, {1, 2, 3}));
    TimeSet r = period_set(k4, 0);
    CHECK(r.offset == Rational(1, 2));
    CHECK(r.period == Rational(1, 2));

    CHECK_THROWS_AS(period_set(c4, 4), input_error);
    CHECK_THROWS_AS(period_set(c4, -1), input_error);
  }

  TEST_CASE("involution partition on Z4 x Z4") {
    Group g({4, 4});
    ElementSet s = class_union(g, {g.index_of({1, 0}), g.index_of({1, 1})});
    CayleyGraph graph(g, s);
    REQUIRE(graph.integral());
    EigenvalueTable t = eigenvalue_table(graph);
    CHECK(t.degree == 4);

    InvolutionPartition p = involution_partition(graph, t, g.index_of({0, 2}));
    CHECK(p.g0.size() == 8);
    CHECK(p.g1.size() == 8);
    CHECK(p.m0 == 4);
    CHECK(p.m1 == 2);
    CHECK(p.rho_uniform);
    CHECK(p.rho == 1);

    CHECK_THROWS_AS(involution_partition(graph, t, g.index_of({1, 0})), input_error);
    CHECK_THROWS_AS(involution_partition(graph, t, 0), input_error);

    Group z8({8});
    CayleyGraph nonintegral(z8, make_set(8, {1, 7}));
    CHECK_THROWS_AS(involution_partition(nonintegral, EigenvalueTable{}, 4), input_error);
  }

  TEST_CASE("pst verdicts with every refusal reason") {
    // C4: PST between antipodes at pi/2.
    Group z4({4});
    CayleyGraph c4(z4, make_set(4, {1, 3}));
    PstReport r = pst_check(c4, 0, 2);
    CHECK(r.has_pst);
    CHECK(!r.reason.has_value());
    CHECK(r.a == 2);
    CHECK(r.m == 2);
    CHECK(r.m0 == 4);
    CHECK(r.m1 == 2);
    CHECK(r.rho == 1);
    CHECK(r.times.offset == Rational(1, 2));
    CHECK(r.times.period == Rational(1));
    // Shift invariance of the difference-only verdict.
    PstReport shifted = pst_check(c4, 1, 3);
    CHECK(shifted.has_pst);
    CHECK(shifted.times == r.times);

    // Pentagon: not integral.
    Group z5({5});
    CayleyGraph pentagon(z5, make_set(5, {1, 4}));
    PstReport ni = pst_check(pentagon, 0, 1);
    CHECK(!ni.has_pst);
    CHECK(ni.reason == NoPstReason::not_integral);
    CHECK(ni.times.empty);

    // C4 adjacent pair: difference has order 4.
    PstReport ord = pst_check(c4, 0, 1);
    CHECK(!ord.has_pst);
    CHECK(ord.reason == NoPstReason::order_not_two);

    // C6 antipodes: G1 valuations split.
    Group z6({6});
    CayleyGraph c6(z6, make_set(6, {1, 5}));
    PstReport nu = pst_check(c6, 0, 3);
    CHECK(!nu.has_pst);
    CHECK(nu.reason == NoPstReason::valuation_nonuniform);
    CHECK(nu.m == 1);
    CHECK(nu.m0 == 3);
    CHECK(nu.m1 == 1);

    // Complete graph on Z_2^4: uniform rho but the G0 gcd is too shallow.
    Group f16({2, 2, 2, 2});
    ElementSet all(16);
    for (long long x = 1; x < 16; ++x) all.insert(x);
    CayleyGraph k16(f16, all);
    PstReport vg = pst_check(k16, 0, 1);
    CHECK(!vg.has_pst);
    CHECK(vg.reason == NoPstReason::valuation_gap);
    CHECK(vg.rho == 4);
    CHECK(vg.m0 == 16);

    CHECK(to_string(NoPstReason::not_integral) == "not-integral");
    CHECK(to_string(NoPstReason::order_not_two) == "order-not-two");
    CHECK(to_string(NoPstReason::valuation_nonuniform) == "valuation-nonuniform");
    CHECK(to_string(NoPstReason::valuation_gap) == "valuation-gap");
  }

  TEST_CASE("pst preconditions") {
    Group z4({4});
    CayleyGraph c4(z4, make_set(4, {1, 3}));
    CHECK_THROWS_AS(pst_check(c4, 0, 0), input_error);
    CHECK_THROWS_AS(pst_check(c4, 0, 4), input_error);
    CHECK_THROWS_AS(pst_check(c4, -1, 2), input_error);

    CayleyGraph nonsimple(z4, make_set(4, {1}));
    CHECK_THROWS_AS(pst_check(nonsimple, 0, 2), input_error);

    Group z8({8});
    CayleyGraph disconnected(z8, make_set(8, {2, 6}));
    CHECK_THROWS_AS(pst_check(disconnected, 0, 4), input_error);

    Group z2({2});
    CayleyGraph k2(z2, make_set(2, {1}));
    CHECK_THROWS_AS(pst_check(k2, 0, 1), input_error);
  }

  TEST_CASE("all-pairs reports") {
    Group g({4, 4});
    ElementSet s = class_union(g, {g.index_of({1, 0}), g.index_of({1, 1})});
    CayleyGraph graph(g, s);
    std::vector<PstReport> reports = pst_all_pairs(graph);
    REQUIRE(reports.size() == 3);  // involutions (0,2), (2,0), (2,2)
    int positives = 0;
    for (const PstReport& r : reports) {
      CHECK(r.from == 0);
      CHECK(r.to == r.a);
      if (r.has_pst) {
        ++positives;
        CHECK(r.a == g.index_of({0, 2}));
        CHECK(r.times.offset == Rational(1, 2));
      }
    }
    CHECK(positives == 1);

    Group z5({5});
    CayleyGraph pentagon(z5, make_set(5, {1, 4}));
    CHECK(pst_all_pairs(pentagon).empty());  // no involutions

    Group z4({4});
    CayleyGraph nonsimple(z4, make_set(4, {1}));
    CHECK_THROWS_AS(pst_all_pairs(nonsimple), input_error);
  }

  TEST_CASE("order 2 mod 4 obstruction") {
    Group z6({6});
    CHECK(mod4_obstruction(CayleyGraph(z6, make_set(6, {1, 5}))));
    Group z10({10});
    CHECK(mod4_obstruction(CayleyGraph(z10, make_set(10, {1, 9}))));
    Group z4({4});
    CHECK(!mod4_obstruction(CayleyGraph(z4, make_set(4, {1, 3}))));
    Group z12({12});
    CHECK(!mod4_obstruction(CayleyGraph(z12, make_set(12, {1, 5, 7, 11}))));
    Group z2({2});
    CHECK(!mod4_obstruction(CayleyGraph(z2, make_set(2, {1}))));
    // The obstruction is consistent with the decision engine: no connected
    // integral graph on Z6 or Z10 reports PST.
    for (const ElementSet& s : all_class_unions(z6)) {
      CayleyGraph graph(z6, s);
      if (!graph.connected()) continue;
      for (const PstReport& r : pst_all_pairs(graph)) CHECK(!r.has_pst);
    }
  }

  TEST_CASE("periodicity constant equals the gcd of the part constants") {
    for (const std::vector<long long>& factors :
         {std::vector<long long>{8}, {12}, {4, 4}, {2, 2, 4}, {2, 6}}) {
      Group g(factors);
      for (const ElementSet& s : all_class_unions(g)) {
        CayleyGraph graph(g, s);
        if (!graph.connected()) continue;
        EigenvalueTable t = eigenvalue_table(graph);
        long long m = big_M(graph, t);
        for (long long a : involutions(g)) {
          InvolutionPartition p = involution_partition(graph, t, a);
          CHECK(m == std::gcd(p.m0, p.m1));
        }
      }
    }
  }

  TEST_CASE("bipartite and chain valuation routes agree with the engine") {
    for (long long n : {4LL, 6LL, 8LL, 12LL}) {
      Group g({n});
      for (const ElementSet& s : all_class_unions(g)) {
        CayleyGraph graph(g, s);
        if (!graph.connected()) continue;
        EigenvalueTable t = eigenvalue_table(graph);
        PstReport r = pst_check(graph, t, 0, n / 2);
        UniformValuation bip = bipartite_valuation_check(graph, t, n / 2);
        UniformValuation chain = circulant_chain_check(graph, t);
        CHECK(r.has_pst == bip.uniform);
        CHECK(r.has_pst == chain.uniform);
        if (r.has_pst) {
          CHECK(bip.rho == r.rho);
          CHECK(chain.rho == r.rho);
        }
      }
    }
  }

  TEST_CASE("valuation route preconditions") {
    Group z5({5});
    CayleyGraph pentagon(z5, make_set(5, {1, 4}));
    CHECK_THROWS_AS(bipartite_valuation_check(pentagon, EigenvalueTable{}, 1), input_error);
    CHECK_THROWS_AS(circulant_chain_check(pentagon, EigenvalueTable{}), input_error);  // odd order

    Group g22({2, 2});
    CayleyGraph square(g22, make_set(4, {1, 2}));
    CHECK_THROWS_AS(circulant_chain_check(square, eigenvalue_table(square)), input_error);

    Group z12({12});
    CayleyGraph c12(z12, class_union(z12, {1}));
    EigenvalueTable t = eigenvalue_table(c12);
    CHECK_THROWS_AS(bipartite_valuation_check(c12, t, 1), input_error);  // pivot order 12
  }
}
