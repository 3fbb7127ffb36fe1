#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "pst/analysis.hpp"

using namespace pst;
using nlohmann::json;

namespace {

CayleyGraph graph_of(const json& doc) {
  GraphInput in = parse_graph_document(doc);
  return CayleyGraph(in.group, in.set);
}

const json kZ4Z4Doc = {{"group", {4, 4}}, {"classes", {{1, 0}, {1, 1}}}};
const json kC4Doc = {{"group", {4}}, {"set", {{1}, {3}}}};
const json kC6Doc = {{"group", {6}}, {"set", {{1}, {5}}}};

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("document parsing variants") {
    GraphInput set_in = parse_graph_document(kC4Doc);
    CHECK(set_in.variant == "set");
    CHECK(set_in.group == Group({4}));
    CHECK(set_in.set.elements() == std::vector<long long>{1, 3});

    // Negative residues are reduced.
    GraphInput neg = parse_graph_document(json{{"group", {4}}, {"set", {{1}, {-1}}}});
    CHECK(neg.set.elements() == std::vector<long long>{1, 3});

    GraphInput cls = parse_graph_document(kZ4Z4Doc);
    CHECK(cls.variant == "classes");
    CHECK(cls.set.size() == 4);

    GraphInput gcd_in =
        parse_graph_document(json{{"group", {8}}, {"gcd_divisors", {{1}, {2}}}});
    CHECK(gcd_in.variant == "gcd_divisors");
    CHECK(gcd_in.set.elements() == std::vector<long long>{1, 2, 3, 5, 6, 7});

    GraphInput cube = parse_graph_document(
        json{{"cubelike", {{"n", 4}, {"support_hex", "6ca0"}}}});
    CHECK(cube.variant == "cubelike");
    CHECK(cube.group == Group({2, 2, 2, 2}));
    CHECK(cube.set.elements() == std::vector<long long>{5, 7, 10, 11, 13, 14});

    GraphInput built = parse_graph_document(
        json{{"cubelike", {{"m", 2}, {"construction", "periodic"}}}});
    CHECK(built.set == cube.set);

    // Unknown extra keys are ignored.
    json extra = kC4Doc;
    extra["comment"] = "irrelevant";
    CHECK(parse_graph_document(extra).set.elements() == std::vector<long long>{1, 3});
  }

  TEST_CASE("document parsing failures") {
    CHECK_THROWS_AS(parse_graph_document(json::array()), input_error);
    CHECK_THROWS_AS(parse_graph_document(json{{"group", {4}}}), input_error);  // no variant
    json two = kC4Doc;
    two["classes"] = {{1}};
    CHECK_THROWS_AS(parse_graph_document(two), input_error);  // two variants
    CHECK_THROWS_AS(parse_graph_document(json{{"set", {{1}}}}), input_error);  // no group
    CHECK_THROWS_AS(parse_graph_document(json{{"group", json::array()}, {"set", {{1}}}}),
                    input_error);
    CHECK_THROWS_AS(parse_graph_document(json{{"group", {4.5}}, {"set", {{1}}}}), input_error);
    CHECK_THROWS_AS(parse_graph_document(json{{"group", {4}}, {"set", json::array()}}),
                    input_error);
    CHECK_THROWS_AS(parse_graph_document(json{{"group", {4}}, {"set", {{1, 2}}}}), input_error);
    CHECK_THROWS_AS(parse_graph_document(json{{"group", {4}}, {"gcd_divisors", {{3}}}}),
                    input_error);
    CHECK_THROWS_AS(
        parse_graph_document(json{{"cubelike", {{"support_hex", "6ca0"}}}}),
        input_error);  // missing n
    CHECK_THROWS_AS(
        parse_graph_document(json{{"cubelike", {{"m", 2}, {"construction", "odd"}}}}),
        input_error);
    CHECK_THROWS_AS(parse_graph_document(json{{"cubelike", {{"m", 2}}}}), input_error);
    CHECK_THROWS_AS(
        parse_graph_document(json{{"group", {2, 2}},
                                  {"cubelike", {{"n", 4}, {"support_hex", "6ca0"}}}}),
        input_error);  // declared group mismatch
  }

  TEST_CASE("document emitters round trip") {
    CayleyGraph c4 = graph_of(kC4Doc);
    json doc = graph_document(c4);
    CHECK(doc["group"] == json({4}));
    GraphInput back = parse_graph_document(doc);
    CHECK(back.set == c4.connection_set());

    CayleyGraph cube = graph_of(json{{"cubelike", {{"n", 4}, {"support_hex", "6ca0"}}}});
    json cdoc = cubelike_document(4, cube.connection_set());
    CHECK(cdoc["cubelike"]["support_hex"] == "6ca0");
    CHECK(cdoc["group"] == json({2, 2, 2, 2}));
    GraphInput cback = parse_graph_document(cdoc);
    CHECK(cback.set == cube.connection_set());

    CHECK_THROWS_AS(cubelike_document(3, cube.connection_set()), input_error);
    CHECK_THROWS_AS(cubelike_document(0, ElementSet(1)), input_error);
  }

  TEST_CASE("analysis of the Z4 x Z4 example") {
    CayleyGraph g = graph_of(kZ4Z4Doc);
    AnalysisReport r = analyze(g);
    CHECK(r.order == 16);
    CHECK(r.exponent == 4);
    CHECK(r.degree == 4);
    CHECK(r.simple);
    CHECK(r.connected);
    CHECK(r.integral);
    CHECK(!r.obstruction);
    REQUIRE(r.classes.size() == 10);
    CHECK(r.classes[0].rep == 0);
    CHECK(r.classes[0].alpha == 4);
    CHECK(r.classes[0].gap == 0);
    long long trace = 0;
    for (const auto& row : r.classes) trace += row.size * row.alpha;
    CHECK(trace == 0);
    CHECK(r.m == 2);
    CHECK(r.period.offset == Rational(1));
    REQUIRE(r.pairs.size() == 3);
    int positives = 0;
    Group grp({4, 4});
    for (const PairFinding& pf : r.pairs) {
      if (pf.report.has_pst) {
        ++positives;
        CHECK(pf.report.a == grp.index_of({0, 2}));
        CHECK(pf.report.times.offset == Rational(1, 2));
        CHECK(pf.report.times.period == Rational(1));
        CHECK(pf.report.m0 == 4);
        CHECK(pf.report.m1 == 2);
        CHECK(pf.report.rho == 1);
      }
    }
    CHECK(positives == 1);

    // Verified mode records residuals and annotates the period.
    AnalysisReport v = analyze(g, {true, 1e-9});
    CHECK(v.verified);
    CHECK(v.period_note.find("oracle residual") != std::string::npos);
    bool found = false;
    for (const PairFinding& pf : v.pairs)
      if (pf.oracle_residual) {
        found = true;
        CHECK(*pf.oracle_residual < 1e-12);
      }
    CHECK(found);
  }

  TEST_CASE("analysis notes for degenerate inputs") {
    // Not integral: a witness class is reported.
    CayleyGraph partial = graph_of(json{{"group", {8}}, {"set", {{1}, {7}}}});
    AnalysisReport ni = analyze(partial);
    CHECK(!ni.integral);
    CHECK(ni.integral_note == "class of (1) is not contained in the connection set");
    CHECK(ni.period_note == "not periodic: the spectrum is not integral");
    CHECK(ni.classes.empty());
    CHECK(!ni.m.has_value());
    REQUIRE(ni.pairs.size() == 1);  // a = 4 is still a candidate
    CHECK(!ni.pairs[0].report.has_pst);

    // Disconnected.
    CayleyGraph half = graph_of(json{{"group", {8}}, {"set", {{2}, {6}}}});
    AnalysisReport dis = analyze(half);
    CHECK(dis.integral);
    CHECK(!dis.connected);
    CHECK(!dis.m.has_value());
    CHECK(dis.period_note == "period is defined for connected graphs only");
    CHECK(dis.pairs_note == "graph is not connected");
    CHECK(dis.pairs.empty());

    // Not simple.
    CayleyGraph loops = graph_of(json{{"group", {4}}, {"set", {{0}}}});
    AnalysisReport ns = analyze(loops);
    CHECK(!ns.simple);
    CHECK(ns.pairs_note ==
          "transfer analysis needs a simple set (0 excluded, closed under negation)");

    // Too small for distinct pairs.
    CayleyGraph k2 = graph_of(json{{"group", {2}}, {"set", {{1}}}});
    AnalysisReport small = analyze(k2);
    CHECK(small.m == 2);
    CHECK(small.pairs_note == "distinct-pair transfer needs at least 3 vertices");

    // No involutions.
    CayleyGraph pentagon = graph_of(json{{"group", {5}}, {"set", {{1}, {4}}}});
    AnalysisReport no_inv = analyze(pentagon);
    CHECK(no_inv.pairs.empty());
    CHECK(no_inv.pairs_note == "no elements of order 2, so no PST candidates");

    // Order 2 mod 4.
    AnalysisReport ob = analyze(graph_of(kC6Doc));
    CHECK(ob.obstruction);
    CHECK(ob.m == 1);
    CHECK(ob.pairs_note == "order 2 mod 4 rules out PST at every time");
    REQUIRE(ob.pairs.size() == 1);
    CHECK(ob.pairs[0].report.reason == NoPstReason::valuation_nonuniform);
  }

  TEST_CASE("rendering is deterministic and carries the verdict") {
    Group grp({4, 4});
    CayleyGraph g = graph_of(kZ4Z4Doc);
    AnalysisReport r = analyze(g);
    std::string text = render_text(r, grp);
    CHECK(text == render_text(analyze(g), grp));
    CHECK(text.find("group: Z4 x Z4  (order 16, exponent 4)") != std::string::npos);
    CHECK(text.find("M: 2") != std::string::npos);
    CHECK(text.find("PST at t = pi*1/2 + k*pi*1 (k >= 0)") != std::string::npos);

    json j = render_json(r, grp);
    CHECK(j.dump() == render_json(analyze(g), grp).dump());
    CHECK(j["m"] == 2);
    CHECK(j["group"]["label"] == "Z4 x Z4");
    REQUIRE(j["pairs"].size() == 3);
    CHECK(j["pairs"][0]["a"] == json({0, 2}));
    CHECK(j["pairs"][0]["has_pst"] == true);
    CHECK(j["pairs"][0]["times"]["offset_text"] == "pi*1/2");
    CHECK(j["pairs"][1]["has_pst"] == false);

    json c6 = render_json(analyze(graph_of(kC6Doc)), Group({6}));
    CHECK(c6["obstruction"] == true);
    CHECK(c6["pairs"][0]["reason"] == "valuation-nonuniform");
    CHECK(c6["period"]["offset_text"] == "pi*2");
  }

  TEST_CASE("q-set enumeration counts") {
    EnumerateResult z6 = enumerate_qsets(Group({6}));
    CHECK(z6.candidates == 7);
    CHECK(z6.connected == 5);
    CHECK(z6.with_pst == 0);
    CHECK(z6.rows.size() == 5);

    EnumerateResult z10 = enumerate_qsets(Group({10}));
    CHECK(z10.candidates == 7);
    CHECK(z10.connected == 5);
    CHECK(z10.with_pst == 0);

    EnumerateResult mixed = enumerate_qsets(Group({2, 6}));
    CHECK(mixed.candidates == 127);
    CHECK(mixed.connected == 104);
    CHECK(mixed.with_pst == 6);
    CHECK(mixed.rows.size() == 104);

    EnumerateResult only = enumerate_qsets(Group({2, 6}), {true});
    CHECK(only.candidates == 127);
    CHECK(only.rows.size() == 6);
    for (const QsetSummary& row : only.rows) {
      CHECK(row.has_pst);
      CHECK(row.m.has_value());
      CHECK(row.pst_a.has_value());
      CHECK(!row.pst_times.empty);
    }

    CHECK_THROWS_AS(enumerate_qsets(Group({2, 2, 2, 2, 2})), budget_error);  // 31 classes
  }

  TEST_CASE("enumeration rendering") {
    Group g({2, 6});
    EnumerateResult r = enumerate_qsets(g, {true});
    std::string text = render_enumerate_text(g, r);
    CHECK(text.find("candidates 127  connected 104  with PST 6") != std::string::npos);
    CHECK(text == render_enumerate_text(g, enumerate_qsets(g, {true})));
    json j = render_enumerate_json(g, r);
    CHECK(j["with_pst"] == 6);
    CHECK(j["rows"].size() == 6);
    CHECK(j["rows"][0]["has_pst"] == true);
  }

  TEST_CASE("exhaustive cubelike sweep on two variables") {
    SweepOptions opt;
    opt.nvars = 2;
    opt.exhaustive = true;
    SweepResult r = cubelike_sweep(opt);
    CHECK(r.examined == 7);
    CHECK(r.connected == 4);
    CHECK(r.with_pst == 3);  // the three 4-cycles; K4 has no PST
    CHECK(r.power_of_two_failures == 0);
    CHECK(r.bound_failures == 0);
    CHECK(r.max_exponent == 1);
    REQUIRE(r.pst_by_exponent.size() == 1);
    CHECK(r.pst_by_exponent.at(1) == 3);

    std::string text = render_sweep_text(opt, r);
    CHECK(text.find("examined 7  connected 4  with PST 3") != std::string::npos);
    json j = render_sweep_json(opt, r);
    CHECK(j["mode"] == "exhaustive");
    CHECK(j["pst_by_exponent"]["1"] == 3);
  }

  TEST_CASE("exhaustive cubelike sweep on three variables") {
    SweepOptions opt;
    opt.nvars = 3;
    opt.exhaustive = true;
    SweepResult r = cubelike_sweep(opt);
    CHECK(r.examined == 127);
    CHECK(r.power_of_two_failures == 0);
    CHECK(r.bound_failures == 0);
    CHECK(r.max_exponent == 1);
  }

  TEST_CASE("randomized sweeps are seeded and reproducible") {
    SweepOptions opt;
    opt.nvars = 3;
    opt.samples = 50;
    opt.seed = 1;
    SweepResult a = cubelike_sweep(opt);
    SweepResult b = cubelike_sweep(opt);
    CHECK(a.examined == 50);
    CHECK(render_sweep_json(opt, a).dump() == render_sweep_json(opt, b).dump());
    opt.seed = 2;
    SweepResult c = cubelike_sweep(opt);
    CHECK(c.examined == 50);  // counts may differ, the run must not throw
  }

  TEST_CASE("sweep option validation") {
    SweepOptions opt;
    opt.nvars = 1;
    opt.exhaustive = true;
    CHECK_THROWS_AS(cubelike_sweep(opt), input_error);
    opt.nvars = 17;
    CHECK_THROWS_AS(cubelike_sweep(opt), input_error);
    opt.nvars = 5;
    CHECK_THROWS_AS(cubelike_sweep(opt), input_error);  // exhaustive beyond n = 4
    opt.exhaustive = false;
    opt.samples = 0;
    CHECK_THROWS_AS(cubelike_sweep(opt), input_error);  // no mode selected
    opt.exhaustive = true;
    opt.samples = 10;
    opt.nvars = 4;
    CHECK_THROWS_AS(cubelike_sweep(opt), input_error);  // both modes selected
  }

  TEST_CASE("class listings") {
    Group z8({8});
    std::string text = render_classes_text(z8);
    CHECK(text.find("classes (4):") != std::string::npos);
    CHECK(text.find("rep (1)  order 8  size 4  members: (1) (3) (5) (7)") != std::string::npos);
    json j = render_classes_json(z8);
    REQUIRE(j["classes"].size() == 4);
    CHECK(j["classes"][1]["members"] == json({{1}, {3}, {5}, {7}}));
    CHECK(j["group"]["exponent"] == 8);
  }
}
