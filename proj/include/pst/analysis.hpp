#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pst/cubelike.hpp"
#include "pst/pst.hpp"

namespace pst {

// A graph description document: "group" plus exactly one of "set", "classes",
// "gcd_divisors", "cubelike".
struct GraphInput {
  Group group;
  ElementSet set;
  std::string variant;
};

GraphInput parse_graph_document(const nlohmann::json& doc);

// Document emitters (round trip through parse_graph_document).
nlohmann::json graph_document(const CayleyGraph& g);
nlohmann::json cubelike_document(int nvars, const ElementSet& s);

struct AnalyzeOptions {
  bool verify = false;
  double tol = 1e-9;
};

struct PairFinding {
  PstReport report;
  std::optional<double> oracle_residual;  // set when verification ran
};

struct AnalysisReport {
  std::vector<long long> factors;
  long long order = 0;
  long long exponent = 0;
  std::vector<long long> set_elements;
  long long degree = 0;

  bool simple = false, connected = false, integral = false;
  std::string integral_note;  // first witness when not integral

  bool obstruction = false;  // order 2 mod 4 (>= 6): no PST possible

  struct ClassRow {
    long long rep = 0, size = 0, alpha = 0, gap = 0;
  };
  std::vector<ClassRow> classes;  // classes of the whole group, when integral

  std::optional<long long> m;  // big M, when defined
  TimeSet period;
  std::string period_note;

  std::vector<PairFinding> pairs;
  std::string pairs_note;

  bool verified = false;
  double tol = 1e-9;
};

// Full analysis; with opt.verify every positive verdict is oracle-checked and
// a disagreement throws internal_error.
AnalysisReport analyze(const CayleyGraph& g, const AnalyzeOptions& opt = {});

std::string render_text(const AnalysisReport& r, const Group& g);
nlohmann::json render_json(const AnalysisReport& r, const Group& g);

// ---- Q-set enumeration ----------------------------------------------------

inline constexpr int kEnumerateClassBudget = 22;

struct EnumerateOptions {
  bool only_pst = false;
};

struct QsetSummary {
  uint64_t mask = 0;  // bit i = nonzero class i included
  std::vector<long long> class_reps;
  long long degree = 0;
  bool connected = false;
  std::optional<long long> m;  // connected graphs only
  bool has_pst = false;
  std::optional<long long> pst_a;  // first PST involution
  TimeSet pst_times;
};

struct EnumerateResult {
  long long candidates = 0;  // nonempty class unions scanned
  long long connected = 0;
  long long with_pst = 0;
  std::vector<QsetSummary> rows;  // ascending mask; filtered by only_pst
};

// Iterate every union of nonzero classes; throws budget_error when the group
// has more than kEnumerateClassBudget nonzero classes.
EnumerateResult enumerate_qsets(const Group& g, const EnumerateOptions& opt = {});

std::string render_enumerate_text(const Group& g, const EnumerateResult& r);
nlohmann::json render_enumerate_json(const Group& g, const EnumerateResult& r);

// ---- Cubelike sweeps -------------------------------------------------------

struct SweepOptions {
  int nvars = 4;
  bool exhaustive = false;   // allowed for nvars <= 4
  long long samples = 0;     // randomized mode
  uint64_t seed = 0;
};

struct SweepResult {
  long long examined = 0;
  long long connected = 0;
  long long with_pst = 0;
  long long power_of_two_failures = 0;  // spectral gap gcd not a power of 2
  long long bound_failures = 0;         // PST exponent outside [1, nvars/2]
  int max_exponent = 0;                 // over PST graphs
  std::map<int, long long> pst_by_exponent;
};

SweepResult cubelike_sweep(const SweepOptions& opt);

std::string render_sweep_text(const SweepOptions& o, const SweepResult& r);
nlohmann::json render_sweep_json(const SweepOptions& o, const SweepResult& r);

// ---- Class listing ---------------------------------------------------------

std::string render_classes_text(const Group& g);
nlohmann::json render_classes_json(const Group& g);

}  // namespace pst
