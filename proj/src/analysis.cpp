#include "pst/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

#include "pst/oracle.hpp"

namespace pst {

namespace {

long long as_long(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer()) throw input_error(std::string(what) + " must be an integer");
  return v.get<long long>();
}

std::string as_string(const nlohmann::json& v, const char* what) {
  if (!v.is_string()) throw input_error(std::string(what) + " must be a string");
  return v.get<std::string>();
}

// Residue vector -> element index; entries are reduced modulo the factors.
long long parse_element(const Group& g, const nlohmann::json& v, const char* what) {
  if (!v.is_array() || static_cast<int>(v.size()) != g.rank())
    throw input_error(std::string(what) + " must be an array of " + std::to_string(g.rank()) +
                      " residues");
  std::vector<long long> residues;
  residues.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    long long n = g.factors()[i];
    long long r = as_long(v[i], what) % n;
    residues.push_back(r < 0 ? r + n : r);
  }
  return g.index_of(residues);
}

Group parse_group_field(const nlohmann::json& doc) {
  const nlohmann::json& gj = doc.at("group");
  if (!gj.is_array() || gj.empty()) throw input_error("\"group\" must be a nonempty array");
  std::vector<long long> factors;
  factors.reserve(gj.size());
  for (const auto& f : gj) factors.push_back(as_long(f, "group factor"));
  return Group(std::move(factors));
}

GraphInput parse_cubelike_field(const nlohmann::json& doc) {
  const nlohmann::json& c = doc.at("cubelike");
  if (!c.is_object()) throw input_error("\"cubelike\" must be an object");

  Group group({2});
  ElementSet set;
  if (c.contains("support_hex")) {
    if (!c.contains("n")) throw input_error("cubelike support needs an \"n\" field");
    int n = static_cast<int>(as_long(c.at("n"), "cubelike n"));
    BooleanFunction f = bf_from_hex(n, as_string(c.at("support_hex"), "support_hex"));
    group = elementary_group(n);
    set = support_set(f);
  } else if (c.contains("m") && c.contains("construction")) {
    int m = static_cast<int>(as_long(c.at("m"), "cubelike m"));
    std::string kind = as_string(c.at("construction"), "construction");
    if (kind == "pst") {
      CayleyGraph g = bent_pst_graph(mm_bent(m));
      group = g.group();
      set = g.connection_set();
    } else if (kind == "periodic") {
      CayleyGraph g = bent_periodic_graph(mm_bent(m));
      group = g.group();
      set = g.connection_set();
    } else {
      throw input_error("\"construction\" must be \"pst\" or \"periodic\"");
    }
  } else {
    throw input_error(
        "\"cubelike\" needs either \"n\" + \"support_hex\" or \"m\" + \"construction\"");
  }

  if (doc.contains("group")) {
    Group declared = parse_group_field(doc);
    if (!(declared == group))
      throw input_error("declared \"group\" does not match the cubelike description");
  }
  return GraphInput{std::move(group), std::move(set), "cubelike"};
}

std::string group_label(const Group& g) {
  std::string s;
  for (size_t i = 0; i < g.factors().size(); ++i) {
    if (i) s += " x ";
    s += "Z" + std::to_string(g.factors()[i]);
  }
  return s;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string time_set_text(const TimeSet& t) {
  if (t.empty) return "none";
  return pi_string(t.offset) + " + k*" + pi_string(t.period) + " (k >= 0)";
}

nlohmann::json time_set_json(const TimeSet& t) {
  nlohmann::json j;
  j["empty"] = t.empty;
  if (!t.empty) {
    j["offset"] = {t.offset.numerator(), t.offset.denominator()};
    j["offset_text"] = pi_string(t.offset);
    j["period"] = {t.period.numerator(), t.period.denominator()};
    j["period_text"] = pi_string(t.period);
  }
  return j;
}

nlohmann::json element_json(const Group& g, long long e) {
  return nlohmann::json(g.residues_of(e));
}

std::string short_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

GraphInput parse_graph_document(const nlohmann::json& doc) {
  if (!doc.is_object()) throw input_error("graph document must be a JSON object");

  static const char* kVariants[] = {"set", "classes", "gcd_divisors", "cubelike"};
  std::string variant;
  int found = 0;
  for (const char* v : kVariants) {
    if (doc.contains(v)) {
      ++found;
      variant = v;
    }
  }
  if (found != 1)
    throw input_error(
        "document needs exactly one of \"set\", \"classes\", \"gcd_divisors\", \"cubelike\"");
  if (variant == "cubelike") return parse_cubelike_field(doc);

  if (!doc.contains("group")) throw input_error("document needs a \"group\" field");
  Group group = parse_group_field(doc);
  const nlohmann::json& body = doc.at(variant);
  if (!body.is_array() || body.empty())
    throw input_error("\"" + variant + "\" must be a nonempty array");

  ElementSet set(group.order());
  if (variant == "set") {
    for (const auto& e : body) set.insert(parse_element(group, e, "set element"));
  } else if (variant == "classes") {
    for (const auto& e : body)
      for (long long x : class_of(group, parse_element(group, e, "class representative")))
        set.insert(x);
  } else {  // gcd_divisors
    std::vector<std::vector<long long>> tuples;
    for (const auto& t : body) {
      if (!t.is_array() || static_cast<int>(t.size()) != group.rank())
        throw input_error("each divisor tuple needs one entry per group factor");
      std::vector<long long> d;
      d.reserve(t.size());
      for (const auto& x : t) d.push_back(as_long(x, "divisor"));
      tuples.push_back(std::move(d));
    }
    set = gcd_set(group, tuples);
  }
  return GraphInput{std::move(group), std::move(set), variant};
}

nlohmann::json graph_document(const CayleyGraph& g) {
  nlohmann::json doc;
  doc["group"] = g.group().factors();
  nlohmann::json elements = nlohmann::json::array();
  for (long long e : g.connection_elements()) elements.push_back(g.group().residues_of(e));
  doc["set"] = std::move(elements);
  return doc;
}

nlohmann::json cubelike_document(int nvars, const ElementSet& s) {
  if (nvars < 1 || nvars > 16) throw input_error("cubelike documents need 1 <= n <= 16");
  if (s.universe() != (1LL << nvars))
    throw input_error("set universe does not match the variable count");
  BooleanFunction f{nvars, std::vector<uint8_t>(static_cast<size_t>(1) << nvars, 0)};
  for (long long e : s.elements()) f.tt[static_cast<size_t>(e)] = 1;
  nlohmann::json doc;
  doc["group"] = elementary_group(nvars).factors();
  doc["cubelike"] = {{"n", nvars}, {"support_hex", bf_to_hex(f)}};
  return doc;
}

AnalysisReport analyze(const CayleyGraph& g, const AnalyzeOptions& opt) {
  const Group& grp = g.group();
  AnalysisReport r;
  r.factors = grp.factors();
  r.order = grp.order();
  r.exponent = grp.exponent();
  r.set_elements = g.connection_elements();
  r.degree = g.degree();
  r.simple = g.simple();
  r.connected = g.connected();
  r.integral = g.integral();
  r.verified = opt.verify;
  r.tol = opt.tol;

  if (!r.integral) {
    for (long long s : g.connection_elements()) {
      bool whole = true;
      for (long long m : class_of(grp, s)) {
        if (!g.connection_set().contains(m)) {
          whole = false;
          break;
        }
      }
      if (!whole) {
        r.integral_note =
            "class of " + grp.element_string(s) + " is not contained in the connection set";
        break;
      }
    }
  }
  r.obstruction = mod4_obstruction(g);

  if (r.integral) {
    EigenvalueTable table = eigenvalue_table(g);
    for (const ElementClass& c : enumerate_classes(grp).classes) {
      AnalysisReport::ClassRow row;
      row.rep = c.rep;
      row.size = static_cast<long long>(c.members.size());
      row.alpha = table.alpha[static_cast<size_t>(c.rep)];
      row.gap = r.degree - row.alpha;
      r.classes.push_back(row);
    }
    if (r.connected) {
      r.m = big_M(g, table);
      r.period = period_set(g, table, 0);
      r.period_note =
          "every vertex is periodic; minimum positive period " + pi_string(r.period.minimum());
      if (opt.verify) {
        VerifyResult v = verify_period(g, 0, r.period.minimum(), opt.tol);
        if (!v.ok)
          throw internal_error("oracle rejects the period claim at t = " +
                               pi_string(r.period.minimum()) + " (residual " +
                               short_double(v.residual) + ")");
        r.period_note += " (oracle residual " + short_double(v.residual) + ")";
      }
    } else {
      r.period_note = "period is defined for connected graphs only";
    }
  } else {
    r.period_note = "not periodic: the spectrum is not integral";
  }

  if (!r.simple) {
    r.pairs_note = "transfer analysis needs a simple set (0 excluded, closed under negation)";
  } else if (!r.connected) {
    r.pairs_note = "graph is not connected";
  } else if (r.order < 3) {
    r.pairs_note = "distinct-pair transfer needs at least 3 vertices";
  } else {
    std::vector<PstReport> reports = pst_all_pairs(g);
    if (reports.empty())
      r.pairs_note = "no elements of order 2, so no PST candidates";
    else if (r.obstruction)
      r.pairs_note = "order 2 mod 4 rules out PST at every time";
    for (PstReport& rep : reports) {
      PairFinding pf;
      pf.report = rep;
      if (opt.verify && rep.has_pst) {
        VerifyResult v = verify_pst(g, rep.from, rep.to, rep.times.minimum(), opt.tol);
        if (!v.ok)
          throw internal_error("oracle rejects PST between " + grp.element_string(rep.from) +
                               " and " + grp.element_string(rep.to) + " (residual " +
                               short_double(v.residual) + ")");
        pf.oracle_residual = v.residual;
      }
      r.pairs.push_back(std::move(pf));
    }
  }
  return r;
}

std::string render_text(const AnalysisReport& r, const Group& g) {
  std::ostringstream out;
  out << "group: " << group_label(g) << "  (order " << r.order << ", exponent " << r.exponent
      << ")\n";
  out << "connection set (degree " << r.degree << "):";
  for (long long e : r.set_elements) out << " " << g.element_string(e);
  out << "\n";
  out << "simple: " << yn(r.simple) << "  connected: " << yn(r.connected)
      << "  integral: " << yn(r.integral) << "\n";
  if (!r.integral_note.empty()) out << "  " << r.integral_note << "\n";
  if (r.obstruction) out << "note: order is 2 mod 4 (>= 6), so no pair admits PST\n";
  if (!r.classes.empty()) {
    out << "classes (rep, size, alpha, gap):\n";
    for (const auto& row : r.classes)
      out << "  " << g.element_string(row.rep) << "  size " << row.size << "  alpha " << row.alpha
          << "  gap " << row.gap << "\n";
  }
  if (r.m) out << "M: " << *r.m << "\n";
  out << "period times: " << time_set_text(r.period);
  if (!r.period_note.empty()) out << "  [" << r.period_note << "]";
  out << "\n";
  if (r.pairs.empty()) {
    out << "pst pairs: none";
    if (!r.pairs_note.empty()) out << "  [" << r.pairs_note << "]";
    out << "\n";
  } else {
    out << "pst pairs:";
    if (!r.pairs_note.empty()) out << "  [" << r.pairs_note << "]";
    out << "\n";
    for (const PairFinding& pf : r.pairs) {
      const PstReport& p = pf.report;
      out << "  a=" << g.element_string(p.a) << "  " << g.element_string(p.from) << " -> "
          << g.element_string(p.to) << ": ";
      if (p.has_pst)
        out << "PST at t = " << time_set_text(p.times);
      else
        out << "no PST (" << to_string(*p.reason) << ")";
      if (p.m) out << "  M=" << *p.m;
      if (p.m0) out << "  M0=" << *p.m0;
      if (p.m1) out << "  M1=" << *p.m1;
      if (p.rho) out << "  rho=" << *p.rho;
      if (pf.oracle_residual) out << "  oracle residual " << short_double(*pf.oracle_residual);
      out << "\n";
    }
  }
  if (r.verified)
    out << "verify: oracle tolerance " << short_double(r.tol)
        << ", all positive verdicts confirmed\n";
  return out.str();
}

nlohmann::json render_json(const AnalysisReport& r, const Group& g) {
  nlohmann::json j;
  j["group"] = {{"factors", r.factors},
                {"order", r.order},
                {"exponent", r.exponent},
                {"label", group_label(g)}};
  nlohmann::json set = nlohmann::json::array();
  for (long long e : r.set_elements) set.push_back(g.residues_of(e));
  j["set"] = std::move(set);
  j["degree"] = r.degree;
  j["simple"] = r.simple;
  j["connected"] = r.connected;
  j["integral"] = r.integral;
  if (!r.integral_note.empty()) j["integral_note"] = r.integral_note;
  j["obstruction"] = r.obstruction;
  if (r.integral) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& row : r.classes)
      classes.push_back({{"rep", g.residues_of(row.rep)},
                         {"size", row.size},
                         {"alpha", row.alpha},
                         {"gap", row.gap}});
    j["classes"] = std::move(classes);
  }
  j["m"] = r.m ? nlohmann::json(*r.m) : nlohmann::json(nullptr);
  j["period"] = time_set_json(r.period);
  j["period_note"] = r.period_note;
  nlohmann::json pairs = nlohmann::json::array();
  for (const PairFinding& pf : r.pairs) {
    const PstReport& p = pf.report;
    nlohmann::json pj;
    pj["a"] = element_json(g, p.a);
    pj["from"] = element_json(g, p.from);
    pj["to"] = element_json(g, p.to);
    pj["has_pst"] = p.has_pst;
    if (p.reason) pj["reason"] = to_string(*p.reason);
    pj["times"] = time_set_json(p.times);
    if (p.m) pj["m"] = *p.m;
    if (p.m0) pj["m0"] = *p.m0;
    if (p.m1) pj["m1"] = *p.m1;
    if (p.rho) pj["rho"] = *p.rho;
    if (pf.oracle_residual) pj["oracle_residual"] = *pf.oracle_residual;
    pairs.push_back(std::move(pj));
  }
  j["pairs"] = std::move(pairs);
  j["pairs_note"] = r.pairs_note;
  j["verify"] = {{"enabled", r.verified}, {"tol", r.tol}};
  return j;
}

EnumerateResult enumerate_qsets(const Group& g, const EnumerateOptions& opt) {
  std::vector<ElementClass> nonzero;
  for (ElementClass& c : enumerate_classes(g).classes)
    if (c.rep != 0) nonzero.push_back(std::move(c));
  if (static_cast<int>(nonzero.size()) > kEnumerateClassBudget)
    throw budget_error("group has " + std::to_string(nonzero.size()) +
                       " nonzero classes; the enumeration budget is " +
                       std::to_string(kEnumerateClassBudget));

  EnumerateResult res;
  const uint64_t total = (uint64_t{1} << nonzero.size()) - 1;
  for (uint64_t mask = 1; mask <= total; ++mask) {
    ElementSet set(g.order());
    for (size_t i = 0; i < nonzero.size(); ++i)
      if (mask >> i & 1)
        for (long long m : nonzero[i].members) set.insert(m);
    ++res.candidates;
    CayleyGraph graph(g, std::move(set));
    if (!graph.connected()) continue;
    ++res.connected;

    QsetSummary row;
    row.mask = mask;
    for (size_t i = 0; i < nonzero.size(); ++i)
      if (mask >> i & 1) row.class_reps.push_back(nonzero[i].rep);
    row.degree = graph.degree();
    row.connected = true;
    row.m = big_M(graph, eigenvalue_table(graph));
    for (const PstReport& rep : pst_all_pairs(graph)) {
      if (rep.has_pst) {
        row.has_pst = true;
        row.pst_a = rep.a;
        row.pst_times = rep.times;
        break;
      }
    }
    if (row.has_pst) ++res.with_pst;
    if (!opt.only_pst || row.has_pst) res.rows.push_back(std::move(row));
  }
  return res;
}

std::string render_enumerate_text(const Group& g, const EnumerateResult& r) {
  std::ostringstream out;
  out << "group: " << group_label(g) << "  (order " << g.order() << ")\n";
  out << "candidates " << r.candidates << "  connected " << r.connected << "  with PST "
      << r.with_pst << "\n";
  char mask_buf[24];
  for (const QsetSummary& row : r.rows) {
    std::snprintf(mask_buf, sizeof mask_buf, "0x%llx", static_cast<unsigned long long>(row.mask));
    out << mask_buf << "  classes";
    for (long long rep : row.class_reps) out << " " << g.element_string(rep);
    out << "  degree " << row.degree;
    if (row.m) out << "  M " << *row.m;
    if (row.has_pst)
      out << "  PST a=" << g.element_string(*row.pst_a) << " t = " << time_set_text(row.pst_times);
    else
      out << "  PST none";
    out << "\n";
  }
  return out.str();
}

nlohmann::json render_enumerate_json(const Group& g, const EnumerateResult& r) {
  nlohmann::json j;
  j["group"] = {{"factors", g.factors()}, {"order", g.order()}, {"label", group_label(g)}};
  j["candidates"] = r.candidates;
  j["connected"] = r.connected;
  j["with_pst"] = r.with_pst;
  nlohmann::json rows = nlohmann::json::array();
  for (const QsetSummary& row : r.rows) {
    nlohmann::json rj;
    rj["mask"] = row.mask;
    nlohmann::json reps = nlohmann::json::array();
    for (long long rep : row.class_reps) reps.push_back(g.residues_of(rep));
    rj["class_reps"] = std::move(reps);
    rj["degree"] = row.degree;
    rj["connected"] = row.connected;
    if (row.m) rj["m"] = *row.m;
    rj["has_pst"] = row.has_pst;
    if (row.pst_a) rj["pst_a"] = element_json(g, *row.pst_a);
    if (row.has_pst) rj["pst_times"] = time_set_json(row.pst_times);
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  return j;
}

SweepResult cubelike_sweep(const SweepOptions& opt) {
  if (opt.nvars < 2 || opt.nvars > 16) throw input_error("sweeps need 2 <= n <= 16");
  if (opt.exhaustive == (opt.samples > 0))
    throw input_error("choose exactly one of exhaustive mode or a positive sample count");
  if (opt.exhaustive && opt.nvars > 4)
    throw input_error("exhaustive sweeps are limited to n <= 4");

  const int n = opt.nvars;
  const long long universe = 1LL << n;

  SweepResult res;
  auto examine = [&](const ElementSet& s) {
    ++res.examined;
    std::vector<long long> alpha = cubelike_spectrum(n, s);
    const long long d = s.size();
    long long gcd = 0;
    // The top eigenvalue d repeats exactly once per connected component.
    bool connected = true;
    for (long long z = 1; z < universe; ++z) {
      long long gap = d - alpha[static_cast<size_t>(z)];
      connected = connected && gap != 0;
      gcd = std::gcd(gcd, gap);
    }
    if (gcd <= 0 || (gcd & (gcd - 1)) != 0) ++res.power_of_two_failures;

    if (!connected) return;
    ++res.connected;
    if (!pst_witness(n, alpha)) return;
    ++res.with_pst;
    if (gcd <= 0 || (gcd & (gcd - 1)) != 0)
      throw internal_error("spectral gap gcd " + std::to_string(gcd) +
                           " of a cubelike graph is not a power of two");
    int ell = std::countr_zero(static_cast<unsigned long long>(gcd));
    res.max_exponent = std::max(res.max_exponent, ell);
    ++res.pst_by_exponent[ell];
    if (ell < 1 || ell > n / 2) ++res.bound_failures;
  };

  if (opt.exhaustive) {
    const uint64_t total = (uint64_t{1} << (universe - 1)) - 1;
    for (uint64_t mask = 1; mask <= total; ++mask) {
      ElementSet s(universe);
      for (long long e = 1; e < universe; ++e)
        if (mask >> (e - 1) & 1) s.insert(e);
      examine(s);
    }
  } else {
    std::mt19937_64 rng(opt.seed);
    for (long long i = 0; i < opt.samples; ++i) {
      ElementSet s(universe);
      long long size = 0;
      while (size == 0) {
        s = ElementSet(universe);
        size = 0;
        for (long long e = 1; e < universe; ++e) {
          if (rng() & 1) {
            s.insert(e);
            ++size;
          }
        }
      }
      examine(s);
    }
  }
  return res;
}

std::string render_sweep_text(const SweepOptions& o, const SweepResult& r) {
  std::ostringstream out;
  out << "cubelike sweep: n=" << o.nvars;
  if (o.exhaustive)
    out << ", exhaustive";
  else
    out << ", " << o.samples << " samples, seed " << o.seed;
  out << "\n";
  out << "examined " << r.examined << "  connected " << r.connected << "  with PST " << r.with_pst
      << "\n";
  out << "spectral gap gcd power-of-two failures: " << r.power_of_two_failures << "\n";
  out << "minimum-time exponent bound failures: " << r.bound_failures << "\n";
  out << "PST graphs by exponent:";
  if (r.pst_by_exponent.empty()) out << " none";
  for (const auto& [ell, count] : r.pst_by_exponent) out << "  l=" << ell << ": " << count;
  out << "\n";
  if (r.with_pst > 0) out << "max exponent: " << r.max_exponent << "\n";
  return out.str();
}

nlohmann::json render_sweep_json(const SweepOptions& o, const SweepResult& r) {
  nlohmann::json j;
  j["nvars"] = o.nvars;
  j["mode"] = o.exhaustive ? "exhaustive" : "random";
  if (!o.exhaustive) {
    j["samples"] = o.samples;
    j["seed"] = o.seed;
  }
  j["examined"] = r.examined;
  j["connected"] = r.connected;
  j["with_pst"] = r.with_pst;
  j["power_of_two_failures"] = r.power_of_two_failures;
  j["bound_failures"] = r.bound_failures;
  j["max_exponent"] = r.max_exponent;
  nlohmann::json by_exp = nlohmann::json::object();
  for (const auto& [ell, count] : r.pst_by_exponent) by_exp[std::to_string(ell)] = count;
  j["pst_by_exponent"] = std::move(by_exp);
  return j;
}

std::string render_classes_text(const Group& g) {
  ClassPartition part = enumerate_classes(g);
  std::ostringstream out;
  out << "group: " << group_label(g) << "  (order " << g.order() << ", exponent " << g.exponent()
      << ")\n";
  out << "classes (" << part.classes.size() << "):\n";
  for (const ElementClass& c : part.classes) {
    out << "  rep " << g.element_string(c.rep) << "  order " << c.order << "  size "
        << c.members.size() << "  members:";
    for (long long m : c.members) out << " " << g.element_string(m);
    out << "\n";
  }
  return out.str();
}

nlohmann::json render_classes_json(const Group& g) {
  ClassPartition part = enumerate_classes(g);
  nlohmann::json j;
  j["group"] = {{"factors", g.factors()},
                {"order", g.order()},
                {"exponent", g.exponent()},
                {"label", group_label(g)}};
  nlohmann::json classes = nlohmann::json::array();
  for (const ElementClass& c : part.classes) {
    nlohmann::json cj;
    cj["rep"] = g.residues_of(c.rep);
    cj["order"] = c.order;
    cj["size"] = c.members.size();
    nlohmann::json members = nlohmann::json::array();
    for (long long m : c.members) members.push_back(g.residues_of(m));
    cj["members"] = std::move(members);
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  return j;
}

}  // namespace pst
