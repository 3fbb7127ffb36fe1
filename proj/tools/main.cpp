#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pst/analysis.hpp"
#include "pst/cubelike.hpp"
#include "pst/oracle.hpp"

namespace {

std::vector<long long> parse_int_list(const std::string& text, const char* what) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      size_t pos = 0;
      long long v = std::stoll(token, &pos);
      if (pos != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (...) {
      throw pst::input_error(std::string(what) + " expects a comma-separated list of integers");
    }
  }
  if (out.empty())
    throw pst::input_error(std::string(what) + " expects a comma-separated list of integers");
  return out;
}

long long element_from_list(const pst::Group& g, std::vector<long long> residues,
                            const char* what) {
  if (static_cast<int>(residues.size()) != g.rank())
    throw pst::input_error(std::string(what) + " needs " + std::to_string(g.rank()) +
                           " residues for this group");
  for (size_t i = 0; i < residues.size(); ++i) {
    long long n = g.factors()[i];
    residues[i] %= n;
    if (residues[i] < 0) residues[i] += n;
  }
  return g.index_of(residues);
}

nlohmann::json load_document(const std::string& path) {
  if (path == "-") return nlohmann::json::parse(std::cin);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw pst::input_error("cannot open input file: " + path);
  return nlohmann::json::parse(f);
}

pst::CayleyGraph graph_from_file(const std::string& path) {
  pst::GraphInput in = pst::parse_graph_document(load_document(path));
  return pst::CayleyGraph(std::move(in.group), std::move(in.set));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw pst::input_error("cannot open output file: " + out_path);
  f << text;
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void add_format_options(CLI::App* cmd, std::string& format, std::string& out) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", out, "write the output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact periodicity and perfect-state-transfer analysis on abelian Cayley graphs"};
  app.require_subcommand(1);

  // analyze -----------------------------------------------------------------
  struct {
    std::string input = "-";
    std::string format = "text";
    std::string out;
    bool verify = false;
    double tol = 1e-9;
  } an;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full report for one graph document");
  analyze_cmd->add_option("input", an.input, "graph document path, or - for stdin");
  analyze_cmd->add_flag("--verify", an.verify,
                        "numerically confirm every positive verdict with the transfer oracle");
  analyze_cmd->add_option("--tol", an.tol, "oracle tolerance")->capture_default_str();
  add_format_options(analyze_cmd, an.format, an.out);
  analyze_cmd->callback([&] {
    pst::CayleyGraph g = graph_from_file(an.input);
    pst::AnalysisReport rep = pst::analyze(g, {an.verify, an.tol});
    emit(an.format == "json" ? dump_json(pst::render_json(rep, g.group()))
                             : pst::render_text(rep, g.group()),
         an.out);
  });

  // classes -----------------------------------------------------------------
  struct {
    std::string group;
    std::string format = "text";
    std::string out;
  } cl;
  CLI::App* classes_cmd =
      app.add_subcommand("classes", "unit-action class partition of an abelian group");
  classes_cmd->add_option("--group", cl.group, "comma-separated factor list, e.g. 4,4")
      ->required();
  add_format_options(classes_cmd, cl.format, cl.out);
  classes_cmd->callback([&] {
    pst::Group g(parse_int_list(cl.group, "--group"));
    emit(cl.format == "json" ? dump_json(pst::render_classes_json(g))
                             : pst::render_classes_text(g),
         cl.out);
  });

  // enumerate ---------------------------------------------------------------
  struct {
    std::string group;
    std::string format = "text";
    std::string out;
    bool only_pst = false;
  } en;
  CLI::App* enum_cmd = app.add_subcommand(
      "enumerate", "every connected integral Cayley graph on a group (unions of classes)");
  enum_cmd->add_option("--group", en.group, "comma-separated factor list, e.g. 2,6")->required();
  enum_cmd->add_flag("--only-pst", en.only_pst, "list only graphs that admit PST");
  add_format_options(enum_cmd, en.format, en.out);
  enum_cmd->callback([&] {
    pst::Group g(parse_int_list(en.group, "--group"));
    pst::EnumerateResult r = pst::enumerate_qsets(g, {en.only_pst});
    emit(en.format == "json" ? dump_json(pst::render_enumerate_json(g, r))
                             : pst::render_enumerate_text(g, r),
         en.out);
  });

  // cubelike ------------------------------------------------------------------
  CLI::App* cubelike_cmd =
      app.add_subcommand("cubelike", "bent-function constructions and property sweeps");
  cubelike_cmd->require_subcommand(1);

  struct {
    int m = 2;
    bool pst = false;
    bool periodic = false;
    bool verify = false;
    double tol = 1e-9;
    std::string format = "text";
    std::string out;
  } cc;
  CLI::App* construct_cmd =
      cubelike_cmd->add_subcommand("construct", "build a bent-function graph and analyze it");
  CLI::Option_group* mode = construct_cmd->add_option_group("mode");
  mode->add_flag("--pst", cc.pst, "graph on 2m+1 variables with PST at t = pi/2^m");
  mode->add_flag("--periodic", cc.periodic, "graph on 2m variables with vertex period pi*2/2^m");
  mode->require_option(1);
  construct_cmd->add_option("--m", cc.m, "bent half-width (graph uses 2m or 2m+1 variables)")
      ->required()
      ->check(CLI::Range(2, 8));
  construct_cmd->add_flag("--verify", cc.verify, "oracle-check the analysis");
  construct_cmd->add_option("--tol", cc.tol, "oracle tolerance")->capture_default_str();
  add_format_options(construct_cmd, cc.format, cc.out);
  construct_cmd->callback([&] {
    pst::CayleyGraph g = cc.pst ? pst::bent_pst_graph(pst::mm_bent(cc.m))
                                : pst::bent_periodic_graph(pst::mm_bent(cc.m));
    nlohmann::json doc = pst::cubelike_document(g.group().rank(), g.connection_set());
    pst::AnalysisReport rep = pst::analyze(g, {cc.verify, cc.tol});
    if (cc.format == "json") {
      nlohmann::json j;
      j["document"] = std::move(doc);
      j["analysis"] = pst::render_json(rep, g.group());
      emit(dump_json(j), cc.out);
    } else {
      emit("document: " + doc.dump() + "\n" + pst::render_text(rep, g.group()), cc.out);
    }
  });

  struct {
    int n = 4;
    bool exhaustive = false;
    long long samples = 0;
    uint64_t seed = 0;
    std::string format = "text";
    std::string out;
  } cs;
  CLI::App* sweep_cmd =
      cubelike_cmd->add_subcommand("sweep", "property statistics over cubelike graphs");
  sweep_cmd->add_option("--n", cs.n, "variable count")->required()->check(CLI::Range(2, 16));
  sweep_cmd->add_flag("--exhaustive", cs.exhaustive,
                      "every nonempty connection set (limited to n <= 4)");
  sweep_cmd->add_option("--samples", cs.samples, "random connection sets to draw");
  sweep_cmd->add_option("--seed", cs.seed, "random seed")->capture_default_str();
  add_format_options(sweep_cmd, cs.format, cs.out);
  sweep_cmd->callback([&] {
    pst::SweepOptions so{cs.n, cs.exhaustive, cs.samples, cs.seed};
    pst::SweepResult r = pst::cubelike_sweep(so);
    emit(cs.format == "json" ? dump_json(pst::render_sweep_json(so, r))
                             : pst::render_sweep_text(so, r),
         cs.out);
  });

  // scan ----------------------------------------------------------------------
  struct {
    std::string input;
    std::string from;
    std::string to;
    std::string out;
    double t_max = 0;
    long long steps = 1001;
  } sc;
  CLI::App* scan_cmd =
      app.add_subcommand("scan", "sample |H_{from,to}(t)| on a uniform grid (CSV)");
  scan_cmd->add_option("input", sc.input, "graph document path, or - for stdin")->required();
  scan_cmd->add_option("--from", sc.from, "source vertex residues, e.g. 0,0")->required();
  scan_cmd->add_option("--to", sc.to, "target vertex residues")->required();
  scan_cmd->add_option("--t-max", sc.t_max, "upper end of the time grid")->required();
  scan_cmd->add_option("--steps", sc.steps, "grid points (both ends included)")
      ->capture_default_str();
  scan_cmd->add_option("--out", sc.out, "write the CSV to a file");
  scan_cmd->callback([&] {
    pst::CayleyGraph g = graph_from_file(sc.input);
    long long from = element_from_list(g.group(), parse_int_list(sc.from, "--from"), "--from");
    long long to = element_from_list(g.group(), parse_int_list(sc.to, "--to"), "--to");
    std::vector<pst::FidelitySample> samples = pst::fidelity_scan(g, from, to, sc.t_max, sc.steps);
    std::ostringstream csv;
    pst::write_scan_csv(csv, samples);
    emit(csv.str(), sc.out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const pst::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
