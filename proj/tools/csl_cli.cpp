// Command-line surface for the exact convex-semilattice toolkit:
// instance loading, law-suite execution with JSON report bundles, and
// one-shot queries (W-membership, extended join, support values, parameter
// solving). All rational I/O is reduced "a/b" text.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csl/csl.hpp"

namespace fs = std::filesystem;
using csl::json;

namespace {

struct SuiteOptions {
  std::string instance_path;
  std::string out_dir = "reports";
  std::uint64_t seed = 0;
  std::size_t cases = 500;
  long denominator_bound = 64;
  std::vector<std::string> laws;
};

const std::vector<std::string> kAllLaws = {
    "convex",      "semilattice", "distributivity", "cancellativity",
    "order-cancellation", "homomorphism", "perspective", "w", "riesz", "embedding"};

std::vector<csl::LawReport> run_law_group(const std::string& law,
                                          const csl::SemilatticeInstance& inst,
                                          const csl::CheckConfig& cfg) {
  using namespace csl;
  if (law == "convex") return {check_convex_axioms(inst, cfg)};
  if (law == "semilattice") return {check_semilattice_axioms(inst, cfg)};
  if (law == "distributivity") return {check_distributivity(inst, cfg)};
  if (law == "cancellativity") return {check_cancellativity(inst, cfg)};
  if (law == "order-cancellation") return {check_order_cancellation(inst, cfg)};
  if (law == "homomorphism") return {check_perspective_homomorphism(inst, cfg)};
  if (law == "perspective")
    return {check_perspective_identities(inst.dim(), cfg),
            check_perspective_composition(inst.dim(), cfg),
            check_perspective_swap(inst.dim(), cfg),
            check_perspective_associativity(inst.dim(), cfg),
            check_param_solutions(cfg),
            check_perspective_inversion(inst.dim(), cfg)};
  if (law == "w") {
    auto reports = verify_w_axioms(inst, cfg);
    reports.push_back(check_w_well_definedness(inst, cfg));
    reports.push_back(check_w_subspace_closure(inst, cfg));
    reports.push_back(check_w_oracle_agreement(inst, cfg));
    reports.push_back(check_w_extension(inst, cfg));
    reports.push_back(check_w_membership_monotone(inst, cfg));
    return reports;
  }
  if (law == "riesz") return {check_riesz_laws(inst.dim(), cfg)};
  if (law == "embedding") return {check_embedding_homomorphism(cfg)};
  throw std::invalid_argument("unknown law group '" + law + "'");
}

int run_check(const SuiteOptions& opt) {
  const csl::LoadedInstance loaded = csl::load_instance_file(opt.instance_path);
  const csl::CheckConfig cfg{opt.seed, opt.cases, opt.denominator_bound};
  const auto selected = opt.laws.empty() ? kAllLaws : opt.laws;

  fs::create_directories(opt.out_dir);
  json summary{{"instance", opt.instance_path},
               {"translation", csl::to_json(loaded.translation)},
               {"seed", opt.seed},
               {"cases", opt.cases},
               {"denominator_bound", opt.denominator_bound}};
  json law_summaries = json::array();
  bool all_pass = true;

  for (const auto& law : selected) {
    for (const auto& report : run_law_group(law, loaded.instance, cfg)) {
      const json j = csl::to_json(report);
      std::ofstream out(fs::path(opt.out_dir) / (report.law + ".json"));
      out << j.dump(2) << '\n';
      law_summaries.push_back(json{{"law", report.law},
                                   {"cases", report.cases_run},
                                   {"violations", report.violations.size()},
                                   {"pass", report.passed()}});
      all_pass = all_pass && report.passed();
      std::cout << (report.passed() ? "PASS " : "FAIL ") << report.law << " ("
                << report.cases_run << " cases, " << report.violations.size()
                << " violations)\n";
    }
  }
  summary["laws"] = law_summaries;
  summary["all_pass"] = all_pass;
  std::ofstream out(fs::path(opt.out_dir) / "summary.json");
  out << summary.dump(2) << '\n';
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rational models of cancellative convex semilattices"};
  app.require_subcommand(1);

  SuiteOptions suite;
  auto* check = app.add_subcommand("check", "run law suites and write a JSON report bundle");
  check->add_option("instance", suite.instance_path, "instance JSON file")->required();
  check->add_option("--seed", suite.seed, "sampler seed");
  check->add_option("--cases", suite.cases, "cases per law");
  check->add_option("--denominator-bound", suite.denominator_bound,
                    "denominator bound for sampled rationals");
  check->add_option("--laws", suite.laws, "law groups to run (default: all)")
      ->delimiter(',');
  check->add_option("--out", suite.out_dir, "report output directory");

  std::string mem_instance, mem_point;
  auto* membership = app.add_subcommand("membership", "decide W-membership of a point");
  membership->add_option("instance", mem_instance)->required();
  membership->add_option("--point", mem_point, "comma-separated rationals")->required();

  std::string join_instance, join_x, join_y;
  auto* join = app.add_subcommand("join", "extended join of two W-points");
  join->add_option("instance", join_instance)->required();
  join->add_option("--x", join_x)->required();
  join->add_option("--y", join_y)->required();

  std::string sup_instance;
  std::vector<std::string> sup_dirs;
  auto* sup = app.add_subcommand("support", "support-function values of the carrier");
  sup->add_option("instance", sup_instance)->required();
  sup->add_option("--dir", sup_dirs, "direction (repeatable, comma-separated rationals)")
      ->required();

  std::vector<std::string> swap_args, pq_args, pr_args;
  auto* params = app.add_subcommand("solve-params", "perspective parameter solvers");
  params->add_option("--swap", swap_args, "p q: swap-law parameters (r, s)")->expected(2);
  params->add_option("--assoc-pq", pq_args, "p q: quadruple with r, s solved")->expected(2);
  params->add_option("--assoc-pr", pr_args, "p r: quadruple with q, s solved")->expected(2);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(suite);

    if (membership->parsed()) {
      const auto loaded = csl::load_instance_file(mem_instance);
      const auto point = csl::QVector::from_string(mem_point);
      json out = csl::to_json(csl::w_membership(loaded.instance, point));
      out["translation"] = csl::to_json(loaded.translation);
      std::cout << out.dump(2) << '\n';
      return 0;
    }

    if (join->parsed()) {
      const auto loaded = csl::load_instance_file(join_instance);
      const auto x = csl::QVector::from_string(join_x);
      const auto y = csl::QVector::from_string(join_y);
      const csl::QVector pts[] = {x, y};
      const csl::Witness w = csl::common_witness(loaded.instance, pts);
      const csl::QVector result = csl::w_join_with_witness(loaded.instance, x, y, w);
      json out{{"result", csl::to_json(result)},
               {"witness", csl::to_json(w)},
               {"translation", csl::to_json(loaded.translation)}};
      std::cout << out.dump(2) << '\n';
      return 0;
    }

    if (sup->parsed()) {
      const auto loaded = csl::load_instance_file(sup_instance);
      std::vector<csl::QVector> dirs;
      for (const auto& d : sup_dirs) dirs.push_back(csl::QVector::from_string(d));
      const auto values = csl::support_embed(loaded.instance.carrier(), dirs);
      json vals = json::array();
      for (const auto& v : values) vals.push_back(v.str());
      std::cout << json{{"values", vals}}.dump(2) << '\n';
      return 0;
    }

    if (params->parsed()) {
      json out;
      if (!swap_args.empty()) {
        const auto [r, s] = csl::solve_swap_params(csl::Rational::from_string(swap_args[0]),
                                                   csl::Rational::from_string(swap_args[1]));
        out = json{{"r", r.str()}, {"s", s.str()}};
      } else if (!pq_args.empty()) {
        const auto quad = csl::solve_assoc_from_pq(csl::Rational::from_string(pq_args[0]),
                                                   csl::Rational::from_string(pq_args[1]));
        out = json{{"p", quad.p.str()}, {"q", quad.q.str()}, {"r", quad.r.str()},
                   {"s", quad.s.str()}};
      } else if (!pr_args.empty()) {
        const auto quad = csl::solve_assoc_from_pr(csl::Rational::from_string(pr_args[0]),
                                                   csl::Rational::from_string(pr_args[1]));
        out = json{{"p", quad.p.str()}, {"q", quad.q.str()}, {"r", quad.r.str()},
                   {"s", quad.s.str()}};
      } else {
        throw std::invalid_argument("solve-params: pass --swap, --assoc-pq or --assoc-pr");
      }
      std::cout << out.dump(2) << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << '\n';
    return 1;
  }
  return 0;
}
