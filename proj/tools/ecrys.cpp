// Command-line front end: generate classical crystals, build the affine
// towers, export composition graphs, and run the statistics-circuit report.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cctype>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecrys/acceptance.hpp"
#include "ecrys/serialize.hpp"

namespace {

using namespace ecrys;

const RootData& root_data(const std::string& type) {
  std::string t;
  for (char c : type) t += static_cast<char>(std::tolower(c));
  if (t == "e6" || t == "e6affine") return RootData::e6();
  if (t == "e7" || t == "e7affine") return RootData::e7();
  throw std::invalid_argument("unknown type " + type);
}

// One verification line: status is "pass", "fail", or "n/a".
struct CheckLine {
  std::string name;
  std::string status;
  std::string witness;
};

void print_checks(const std::vector<CheckLine>& checks) {
  for (const auto& c : checks) {
    std::cout << c.name << ": " << c.status << "\n";
    if (c.status == "fail" && !c.witness.empty())
      std::cout << "  " << c.witness << "\n";
  }
}

// Machine-readable summary of a verification run.
void write_report(const std::string& path, const std::string& command,
                  const std::vector<CheckLine>& checks,
                  const std::vector<std::pair<std::string, long long>>& numbers) {
  nlohmann::ordered_json j;
  j["command"] = command;
  bool all = true;
  for (const auto& c : checks) all = all && c.status != "fail";
  j["pass"] = all;
  if (!numbers.empty()) {
    nlohmann::ordered_json n;
    for (const auto& [k, v] : numbers) n[k] = v;
    j["numbers"] = n;
  }
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"status", c.status},
                   {"witness", c.witness}});
  j["checks"] = arr;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << j.dump(2) << "\n";
}

void write_document(const Document& d, const std::string& format,
                    const std::string& out) {
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot open " + out);
  f << (format == "json" ? json_str(d) : to_dot(d));
}

struct GenArgs {
  std::string type = "E6";
  std::vector<int> weight;
  std::vector<std::vector<int>> plus;
  std::string format;
  std::string out;
};

int run_gen(const GenArgs& a) {
  const RootData& rd = root_data(a.type);
  auto add = [&](Weight& lam, const std::vector<int>& v) {
    if (static_cast<int>(v.size()) != rd.rank)
      throw std::invalid_argument("weight needs " + std::to_string(rd.rank) +
                                  " entries");
    for (int i = 0; i < rd.rank; ++i) {
      if (v[i] < 0) throw std::invalid_argument("weight entries must be >= 0");
      lam[i + 1] += v[i];
    }
  };
  Weight lam;
  add(lam, a.weight);
  for (const auto& p : a.plus) add(lam, p);
  CrystalGraph g = gen_classical(rd, lam);
  std::cout << g.size() << "\n";
  if (!a.format.empty())
    write_document(document_from_graph(g, false), a.format, a.out);
  return 0;
}

struct KrArgs {
  std::string type = "E6affine";
  int r = 1, s = 1;
  bool verify = false;
  std::string format;
  std::string out;
  std::string report;
};

int run_kr(const KrArgs& a) {
  const RootData& rd = root_data(a.type);
  std::string t;
  for (char c : a.type) t += static_cast<char>(std::tolower(c));
  if (t != "e6affine" && t != "e7affine")
    throw std::invalid_argument("kr needs --type E6affine or E7affine");
  KRCrystal kr = kr_crystal(rd, a.r, a.s);

  int zeros = 0;
  for (int v = 0; v < kr.g.size(); ++v)
    if (kr.g.f(v, 0) >= 0) ++zeros;
  std::cout << "nodes: " << kr.g.size() << "\n";
  std::cout << "zero-arrows: " << zeros << "\n";
  if (!a.format.empty())
    write_document(document_from_graph(kr.g, true, kr.r, kr.s), a.format,
                   a.out);

  if (!a.verify) return 0;
  std::vector<CheckLine> checks;
  std::vector<int> colors;
  for (int c = 0; c <= rd.rank; ++c) colors.push_back(c);
  RegularReport reg = check_regular(kr.g, rd, colors);
  checks.push_back({"check_regular", reg.pass ? "pass" : "fail",
                    reg.local.pass ? reg.rank2.witness : reg.local.witness});
  bool order_ok = check_order(kr.prom, kr.twist.order);
  checks.push_back({"check_order", order_ok ? "pass" : "fail",
                    order_ok ? "" : "promotion order is not " +
                                        std::to_string(kr.twist.order)});
  if (rd.rank == 6 && (a.r == 1 || a.r == 6)) {
    bool iso = restriction_iso_check(kr);
    checks.push_back({"restriction_iso", iso ? "pass" : "fail",
                      iso ? "" : "deleted-color relabeling is not an "
                                 "isomorphism onto the partner crystal"});
  } else {
    checks.push_back({"restriction_iso", "n/a", ""});
  }
  print_checks(checks);
  if (!a.report.empty())
    write_report(a.report, "kr", checks,
                 {{"nodes", kr.g.size()}, {"zero_arrows", zeros}});
  for (const auto& c : checks)
    if (c.status == "fail") return 1;
  return 0;
}

struct CompArgs {
  std::string type = "E6";
  int fund = 2;
  std::vector<int> J;
  bool level0 = false;
  std::string format;
  std::string out;
};

int run_compgraph(const CompArgs& a) {
  const RootData& rd = root_data(a.type);
  for (int c : a.J)
    if (c < 1 || c > rd.rank)
      throw std::invalid_argument("J entries must be classical colors");
  if (a.fund < 1 || a.fund > rd.rank)
    throw std::invalid_argument("--fund must be a classical color");
  CompGraph g = CompGraph::build(rd, a.fund, a.J, a.level0);
  std::cout << "vertices: " << g.nv() << "\n";
  if (!a.format.empty())
    write_document(document_from_compgraph(g), a.format, a.out);
  return 0;
}

int run_circuits(const std::string& report) {
  CompGraph g = CompGraph::build(RootData::e6(), 2, {1, 6}, true);
  auto cols = level0_stats_matrix(g);
  CircuitSet cs = matroid_circuits(cols);

  std::vector<std::vector<long long>> rows(5, std::vector<long long>(11));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 11; ++j) rows[i][j] = cols[j][i];
  int rank = int_rank(rows);
  std::cout << "statistics matrix rank: " << rank << "\n";
  std::cout << "nullspace rank: " << 11 - rank << "\n";
  std::cout << "unsigned circuits: " << cs.unsigned_count << "\n";
  std::cout << "signed circuits: " << cs.signed_count << "\n";

  std::size_t bad = 0;
  for (const Circuit& c : cs.circuits)
    if (violates_chain_constraints(g, c.dep)) ++bad;
  std::cout << "chain violations: " << bad << "/" << cs.circuits.size()
            << "\n";
  if (!report.empty()) {
    VerReport viol = check_circuits_violate_chains(cs, g);
    write_report(report, "circuits",
                 {{"all_circuits_violate_chains", viol.pass ? "pass" : "fail",
                   viol.witness}},
                 {{"matrix_rank", rank},
                  {"nullspace_rank", 11 - rank},
                  {"unsigned_circuits",
                   static_cast<long long>(cs.unsigned_count)},
                  {"signed_circuits", static_cast<long long>(cs.signed_count)},
                  {"chain_violations", static_cast<long long>(bad)}});
  }
  return bad == cs.circuits.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exceptional-type crystal graphs and affine towers"};
  app.require_subcommand(1);

  GenArgs ga;
  CLI::App* gen = app.add_subcommand("gen", "generate a classical crystal");
  gen->add_option("--type", ga.type, "E6 or E7")
      ->check(CLI::IsMember({"E6", "E7"}, CLI::ignore_case));
  gen->add_option("--weight", ga.weight,
                  "fundamental-weight coefficients, classical indices")
      ->required()
      ->delimiter(',');
  gen->add_option("--plus", ga.plus, "additional summand (repeatable)")
      ->delimiter(',');
  gen->add_option("--format", ga.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  gen->add_option("--out", ga.out, "output file");

  KrArgs ka;
  CLI::App* kr = app.add_subcommand("kr", "build an affine tower B^{r,s}");
  kr->add_option("--type", ka.type, "E6affine or E7affine")
      ->check(CLI::IsMember({"E6affine", "E7affine"}, CLI::ignore_case));
  kr->add_option("--r", ka.r, "column index")->required();
  kr->add_option("--s", ka.s, "column count")->required();
  kr->add_flag("--verify", ka.verify, "run the structural checks");
  kr->add_option("--format", ka.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  kr->add_option("--out", ka.out, "output file");
  kr->add_option("--report", ka.report,
                 "write the verification summary as JSON");

  CompArgs ca;
  CLI::App* cg = app.add_subcommand("compgraph", "export a composition graph");
  cg->add_option("--type", ca.type, "E6 or E7")
      ->check(CLI::IsMember({"E6", "E7"}, CLI::ignore_case));
  cg->add_option("--fund", ca.fund, "fundamental index")->required();
  cg->add_option("--J", ca.J, "relation colors")->required()->delimiter(',');
  cg->add_flag("--level0", ca.level0, "level-zero variant");
  cg->add_option("--format", ca.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  cg->add_option("--out", ca.out, "output file");

  CLI::App* circ =
      app.add_subcommand("circuits", "statistics-dependence circuit report");
  std::string circ_report;
  circ->add_option("--report", circ_report,
                   "write the circuit summary as JSON");

  bool long_suite = false;
  CLI::App* acc = app.add_subcommand("accept", "run the acceptance suite");
  acc->add_flag("--long", long_suite, "include the largest rank-seven checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      if (!ga.format.empty() && ga.out.empty())
        throw std::invalid_argument("--format needs --out");
      return run_gen(ga);
    }
    if (kr->parsed()) {
      if (!ka.format.empty() && ka.out.empty())
        throw std::invalid_argument("--format needs --out");
      if (!ka.report.empty() && !ka.verify)
        throw std::invalid_argument("--report needs --verify");
      return run_kr(ka);
    }
    if (cg->parsed()) {
      if (!ca.format.empty() && ca.out.empty())
        throw std::invalid_argument("--format needs --out");
      return run_compgraph(ca);
    }
    if (circ->parsed()) return run_circuits(circ_report);
    if (acc->parsed())
      return run_acceptance(long_suite, std::cout) == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
