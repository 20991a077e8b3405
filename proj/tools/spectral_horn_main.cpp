// spectral-horn: decide when Hermitian matrices with prescribed spectra can
// sum to a positive semidefinite matrix of bounded rank; emit the inequality
// system, check instances exactly, search for witness matrices, and certify
// that each inequality is a facet.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include "horn/io.hpp"

namespace {

using nlohmann::json;

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write: " + out_path);
  out << payload;
}

struct IneqsOpts {
  int n = 0, m = 0, r = 0;
  std::string format = "text";
  bool include_dagger = false;
  std::string out;
};

int run_ineqs(const IneqsOpts& opt) {
  auto system = horn::build_system(opt.n, opt.m, opt.r);
  std::string payload = (opt.format == "json")
                            ? horn::system_to_json(system, opt.include_dagger).dump(2) + "\n"
                            : horn::system_to_text(system, opt.include_dagger);
  emit(payload, opt.out);
  return 0;
}

struct CheckOpts {
  std::string instance_path;
  bool extended = false;
  std::string format = "text";
};

int run_check(const CheckOpts& opt) {
  auto inst = horn::read_instance_file(opt.instance_path);
  const auto& system = horn::cached_system(inst.n, inst.m, inst.r, opt.extended);
  auto verdict = horn::check_with_system(inst, system);
  if (opt.format == "json")
    std::cout << horn::verdict_to_json(system, verdict).dump(2) << "\n";
  else
    std::cout << horn::verdict_to_text(system, verdict);
  return verdict.feasible ? 0 : 1;
}

struct RealizeOpts {
  std::string instance_path;
  int restarts = 100;
  int max_iterations = 2000;
  double tolerance = 1e-7;
  std::uint64_t seed = 0;
  std::string out;
};

int run_realize(const RealizeOpts& opt) {
  auto inst = horn::read_instance_file(opt.instance_path);
  horn::OptimizerConfig cfg;
  cfg.restarts = opt.restarts;
  cfg.max_iterations = opt.max_iterations;
  cfg.tolerance = opt.tolerance;
  cfg.seed = opt.seed;
  auto result = horn::realize(inst, cfg);
  if (result.found) {
    auto verification =
        horn::verify_realization(result.matrices, inst, std::sqrt(cfg.tolerance));
    emit(horn::realization_to_json(result, &verification).dump(2) + "\n", opt.out);
    return 0;
  }
  emit(horn::realization_to_json(result).dump(2) + "\n", opt.out);
  return 3;
}

struct FacetsOpts {
  int n = 0, m = 0, r = 0;
  std::vector<std::string> extra_rows;
  std::string format = "text";
};

int run_facets(const FacetsOpts& opt) {
  auto system = horn::build_system(opt.n, opt.m, opt.r);
  for (const auto& line : opt.extra_rows) {
    auto row = horn::detail::parse_horn_row(line, opt.n, opt.m, opt.r);
    if (row.kind == horn::IneqKind::Major)
      system.majors.push_back(std::move(row));
    else
      system.rank_bounds.push_back(std::move(row));
  }

  bool all_certified = true;
  json rows = json::array();
  if (opt.format != "json")
    std::printf("%-16s %-42s %-12s %-6s %-7s %-12s %s\n", "row", "description", "delta", "tight",
                "strict", "irredundant", "certified");
  for (int flat = 0; flat < system.total_rows(); ++flat) {
    horn::RowRef ref = system.row_ref(flat);
    auto facet = horn::facet_witness(system, ref);
    auto irr = horn::irredundancy(system, ref);
    bool certified = facet.certified() && irr.irredundant;
    all_certified = all_certified && certified;
    if (opt.format == "json") {
      rows.push_back(json{{"row", system.row_name(ref)},
                          {"description", horn::describe_row(system, ref)},
                          {"delta", horn::format_rational(facet.delta)},
                          {"tight", facet.tight_verified},
                          {"others_strict", facet.all_others_strict},
                          {"irredundant", irr.irredundant},
                          {"certified", certified},
                          {"witness", horn::instance_to_json(facet.witness)}});
    } else {
      std::printf("%-16s %-42s %-12s %-6s %-7s %-12s %s\n",
                  system.row_name(ref).c_str(), horn::describe_row(system, ref).c_str(),
                  horn::format_rational(facet.delta).c_str(),
                  facet.tight_verified ? "yes" : "no",
                  facet.all_others_strict ? "yes" : "no", irr.irredundant ? "yes" : "no",
                  certified ? "yes" : "no");
    }
  }
  if (opt.format == "json") std::cout << rows.dump(2) << "\n";
  return all_certified ? 0 : 1;
}

struct LrOpts {
  std::string lambdas;
  std::string bound;
  std::string target;
};

int run_lr(const LrOpts& opt) {
  std::vector<horn::Partition> factors;
  std::stringstream ss(opt.lambdas);
  std::string piece;
  while (std::getline(ss, piece, ';'))
    if (!piece.empty()) factors.push_back(horn::parse_partition(piece));
  auto x = opt.bound.find('x');
  if (x == std::string::npos) throw std::invalid_argument("bound must look like 2x2");
  horn::RectangleBound bound{std::stoi(opt.bound.substr(0, x)),
                             std::stoi(opt.bound.substr(x + 1))};
  auto target = horn::parse_partition(opt.target);
  std::cout << horn::product_coefficient(factors, bound, target).str() << "\n";
  return 0;
}

struct SampleOpts {
  int n = 0, m = 0, r = 0;
  int count = 1;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
};

int run_forward_sample(const SampleOpts& opt) {
  std::mt19937_64 rng(opt.seed);
  for (int k = 0; k < opt.count; ++k) {
    auto sample = horn::forward_sample(opt.n, opt.m, opt.r, rng);
    char name[64];
    std::snprintf(name, sizeof(name), "sample_%03d", k);
    std::string instance_path = opt.out_dir + "/" + name + ".json";
    horn::write_instance_file(instance_path, sample.instance);
    json matrices = json::array();
    for (const auto& M : sample.matrices) matrices.push_back(horn::matrix_to_json(M));
    std::ofstream mat_out(opt.out_dir + "/" + name + "_matrices.json");
    if (!mat_out) throw std::runtime_error("cannot write matrices for " + instance_path);
    mat_out << json{{"matrices", std::move(matrices)}}.dump(2) << "\n";
    std::cout << instance_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalue feasibility for Hermitian sums of bounded rank"};
  app.require_subcommand(1);

  IneqsOpts ineqs;
  auto* cmd_ineqs = app.add_subcommand("ineqs", "emit the inequality system for (n, m, r)");
  cmd_ineqs->add_option("--n", ineqs.n, "matrix size")->required();
  cmd_ineqs->add_option("--m", ineqs.m, "number of spectra")->required();
  cmd_ineqs->add_option("--r", ineqs.r, "rank bound")->required();
  cmd_ineqs->add_option("--format", ineqs.format)->check(CLI::IsMember({"text", "json"}));
  cmd_ineqs->add_flag("--include-dagger", ineqs.include_dagger, "also list ordering rows");
  cmd_ineqs->add_option("-o,--out", ineqs.out, "output file (default stdout)");

  CheckOpts check;
  auto* cmd_check = app.add_subcommand("check", "exact feasibility verdict for an instance");
  cmd_check->add_option("instance", check.instance_path, "instance JSON file")->required();
  cmd_check->add_flag("--extended", check.extended, "use the enlarged S-indexed system");
  cmd_check->add_option("--format", check.format)->check(CLI::IsMember({"text", "json"}));

  RealizeOpts realize;
  auto* cmd_realize = app.add_subcommand("realize", "search for witness matrices");
  cmd_realize->add_option("instance", realize.instance_path)->required();
  cmd_realize->add_option("--restarts", realize.restarts);
  cmd_realize->add_option("--max-iters", realize.max_iterations);
  cmd_realize->add_option("--tol", realize.tolerance);
  cmd_realize->add_option("--seed", realize.seed);
  cmd_realize->add_option("-o,--out", realize.out, "report file (default stdout)");

  FacetsOpts facets;
  auto* cmd_facets = app.add_subcommand("facets", "facet certificates for every row");
  cmd_facets->add_option("--n", facets.n)->required();
  cmd_facets->add_option("--m", facets.m)->required();
  cmd_facets->add_option("--r", facets.r)->required();
  cmd_facets->add_option("--extra-row", facets.extra_rows,
                         "append a row in the text format (repeatable)");
  cmd_facets->add_option("--format", facets.format)->check(CLI::IsMember({"text", "json"}));

  LrOpts lr;
  auto* cmd_lr = app.add_subcommand("lr", "Littlewood-Richardson product coefficient");
  cmd_lr->add_option("--lambdas", lr.lambdas, "factors, e.g. \"(1);(1);(2)\"")->required();
  cmd_lr->add_option("--bound", lr.bound, "rectangle, e.g. 2x2")->required();
  cmd_lr->add_option("--target", lr.target, "target partition, e.g. (2,2)")->required();

  SampleOpts sample;
  auto* cmd_sample = app.add_subcommand("forward-sample", "draw feasible instances");
  cmd_sample->add_option("--n", sample.n)->required();
  cmd_sample->add_option("--m", sample.m)->required();
  cmd_sample->add_option("--r", sample.r)->required();
  cmd_sample->add_option("--count", sample.count);
  cmd_sample->add_option("--seed", sample.seed);
  cmd_sample->add_option("-o,--out", sample.out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_ineqs)) return run_ineqs(ineqs);
    if (app.got_subcommand(cmd_check)) return run_check(check);
    if (app.got_subcommand(cmd_realize)) return run_realize(realize);
    if (app.got_subcommand(cmd_facets)) return run_facets(facets);
    if (app.got_subcommand(cmd_lr)) return run_lr(lr);
    if (app.got_subcommand(cmd_sample)) return run_forward_sample(sample);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
