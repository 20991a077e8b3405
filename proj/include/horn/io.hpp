#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "horn/facet.hpp"
#include "horn/feasibility.hpp"
#include "horn/realize.hpp"
#include "horn/system.hpp"
#include "horn/version.hpp"

namespace horn {

using nlohmann::json;

inline std::string generator_tag() { return std::string("spectral-horn/") + kVersion; }

// ---- instance files -------------------------------------------------------

inline json instance_to_json(const SpectrumInstance& inst) {
  json alpha = json::array();
  for (const auto& tuple : inst.alpha) {
    json row = json::array();
    for (const auto& value : tuple) row.push_back(format_rational(value));
    alpha.push_back(std::move(row));
  }
  return json{{"n", inst.n}, {"m", inst.m}, {"r", inst.r}, {"alpha", std::move(alpha)}};
}

inline SpectrumInstance instance_from_json(const json& j) {
  SpectrumInstance inst;
  inst.n = j.at("n").get<int>();
  inst.m = j.at("m").get<int>();
  inst.r = j.at("r").get<int>();
  for (const auto& row : j.at("alpha")) {
    std::vector<Rational> tuple;
    for (const auto& value : row) tuple.push_back(parse_rational(value.get<std::string>()));
    inst.alpha.push_back(std::move(tuple));
  }
  inst.validate();
  return inst;
}

inline SpectrumInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  json j;
  in >> j;
  return instance_from_json(j);
}

inline void write_instance_file(const std::string& path, const SpectrumInstance& inst) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << instance_to_json(inst).dump(2) << "\n";
}

// ---- inequality rows ------------------------------------------------------

inline std::string format_subset(const SchubertIndex& index) { return index.to_string(); }

inline std::vector<int> parse_subset(const std::string& token) {
  if (token.size() < 2 || token.front() != '{' || token.back() != '}')
    throw std::invalid_argument("bad subset token: " + token);
  std::vector<int> elements;
  std::string body = token.substr(1, token.size() - 2);
  std::stringstream ss(body);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (piece.empty()) continue;
    elements.push_back(std::stoi(piece));
  }
  return elements;
}

/// One row in the text format, e.g. "major t=2 I1={1,3} I2={1,3} I3={1,4}".
inline std::string describe_row(const HornInequality& ineq) {
  std::string out = (ineq.kind == IneqKind::Major) ? "major" : "rank";
  out += " t=" + std::to_string(ineq.t);
  const char* slot = (ineq.kind == IneqKind::Major) ? "I" : "P";
  for (int s = 1; s <= ineq.m; ++s)
    out += " " + std::string(slot) + std::to_string(s) + "=" +
           format_subset(ineq.subsets[static_cast<size_t>(s - 1)]);
  return out;
}

inline std::string describe_row(const DaggerRow& row) {
  return "dagger s=" + std::to_string(row.s) + " i=" + std::to_string(row.i);
}

inline std::string describe_row(const InequalitySystem& system, RowRef ref) {
  switch (ref.kind) {
    case RowKind::Dagger:
      return describe_row(system.dagger_rows.at(static_cast<size_t>(ref.index)));
    case RowKind::Major:
      return describe_row(system.majors.at(static_cast<size_t>(ref.index)));
    case RowKind::RankBound:
      return describe_row(system.rank_bounds.at(static_cast<size_t>(ref.index)));
  }
  throw std::logic_error("bad row kind");
}

// ---- system files ---------------------------------------------------------

inline std::string system_to_text(const InequalitySystem& system, bool include_dagger = false) {
  std::string out = "# spectral-horn system n=" + std::to_string(system.n) +
                    " m=" + std::to_string(system.m) + " r=" + std::to_string(system.r) +
                    " generator=" + generator_tag() + "\n";
  if (include_dagger)
    for (const auto& row : system.dagger_rows) out += describe_row(row) + "\n";
  for (const auto& row : system.majors) out += describe_row(row) + "\n";
  for (const auto& row : system.rank_bounds) out += describe_row(row) + "\n";
  return out;
}

namespace detail {

inline int parse_labeled_int(const std::string& token, const std::string& label) {
  if (token.rfind(label, 0) != 0)
    throw std::invalid_argument("expected '" + label + "...' but saw '" + token + "'");
  return std::stoi(token.substr(label.size()));
}

inline HornInequality parse_horn_row(const std::string& line, int n, int m, int r) {
  std::stringstream ss(line);
  std::string kind_token, t_token;
  ss >> kind_token >> t_token;
  IneqKind kind = (kind_token == "major") ? IneqKind::Major : IneqKind::RankBound;
  int t = parse_labeled_int(t_token, "t=");
  int ambient = (kind == IneqKind::Major) ? n : n - r;
  std::vector<SchubertIndex> subsets;
  std::string token;
  while (ss >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad row token: " + token);
    subsets.emplace_back(ambient, parse_subset(token.substr(eq + 1)));
  }
  if (static_cast<int>(subsets.size()) != m)
    throw std::invalid_argument("row has wrong number of subsets: " + line);
  for (const auto& subset : subsets)
    if (subset.cardinality() != t) throw std::invalid_argument("row cardinality mismatch: " + line);
  return {kind, t, std::move(subsets), n, m, r};
}

}  // namespace detail

inline InequalitySystem system_from_text(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  InequalitySystem system;
  bool have_header = false;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::stringstream hs(line);
      std::string hash, word, n_token, m_token, r_token;
      hs >> hash >> word >> word >> n_token >> m_token >> r_token;
      system.n = detail::parse_labeled_int(n_token, "n=");
      system.m = detail::parse_labeled_int(m_token, "m=");
      system.r = detail::parse_labeled_int(r_token, "r=");
      system.dagger_rows = detail::make_dagger_rows(system.n, system.m);
      have_header = true;
      continue;
    }
    if (!have_header) throw std::invalid_argument("system text is missing its header");
    if (line.rfind("dagger", 0) == 0) continue;  // derived from (n, m)
    auto row = detail::parse_horn_row(line, system.n, system.m, system.r);
    if (row.kind == IneqKind::Major)
      system.majors.push_back(std::move(row));
    else
      system.rank_bounds.push_back(std::move(row));
  }
  if (!have_header) throw std::invalid_argument("system text is missing its header");
  return system;
}

inline json system_to_json(const InequalitySystem& system, bool include_dagger = false) {
  auto rows_to_json = [](const std::vector<HornInequality>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
      json subsets = json::array();
      for (const auto& subset : row.subsets) subsets.push_back(subset.elements());
      out.push_back(json{{"t", row.t}, {"subsets", std::move(subsets)}});
    }
    return out;
  };
  json j{{"n", system.n},
         {"m", system.m},
         {"r", system.r},
         {"generator", generator_tag()},
         {"majors", rows_to_json(system.majors)},
         {"rank_bounds", rows_to_json(system.rank_bounds)}};
  if (include_dagger) {
    json dagger = json::array();
    for (const auto& row : system.dagger_rows)
      dagger.push_back(json{{"s", row.s}, {"i", row.i}});
    j["dagger"] = std::move(dagger);
  }
  return j;
}

inline InequalitySystem system_from_json(const json& j) {
  InequalitySystem system;
  system.n = j.at("n").get<int>();
  system.m = j.at("m").get<int>();
  system.r = j.at("r").get<int>();
  system.dagger_rows = detail::make_dagger_rows(system.n, system.m);
  auto rows_from_json = [&](const json& rows, IneqKind kind) {
    std::vector<HornInequality> out;
    int ambient = (kind == IneqKind::Major) ? system.n : system.n - system.r;
    for (const auto& row : rows) {
      std::vector<SchubertIndex> subsets;
      for (const auto& subset : row.at("subsets"))
        subsets.emplace_back(ambient, subset.get<std::vector<int>>());
      out.push_back({kind, row.at("t").get<int>(), std::move(subsets), system.n, system.m,
                     system.r});
    }
    return out;
  };
  system.majors = rows_from_json(j.at("majors"), IneqKind::Major);
  system.rank_bounds = rows_from_json(j.at("rank_bounds"), IneqKind::RankBound);
  return system;
}

// ---- reports --------------------------------------------------------------

inline json verdict_to_json(const InequalitySystem& system, const Verdict& verdict) {
  json margins = json::array();
  for (int flat = 0; flat < system.total_rows(); ++flat) {
    RowRef ref = system.row_ref(flat);
    margins.push_back(json{{"row", system.row_name(ref)},
                           {"kind", ref.kind == RowKind::Dagger
                                        ? "dagger"
                                        : (ref.kind == RowKind::Major ? "major" : "rank")},
                           {"description", describe_row(system, ref)},
                           {"slack", format_rational(verdict.margins[static_cast<size_t>(flat)])}});
  }
  json tight = json::array(), violated = json::array(), dagger = json::array();
  for (RowRef ref : verdict.tight) tight.push_back(system.row_name(ref));
  for (RowRef ref : verdict.violated) violated.push_back(system.row_name(ref));
  for (const auto& row : verdict.dagger_violations)
    dagger.push_back(json{{"s", row.s}, {"i", row.i}});
  return json{{"feasible", verdict.feasible},
              {"dagger_violations", std::move(dagger)},
              {"tight", std::move(tight)},
              {"violated", std::move(violated)},
              {"margins", std::move(margins)}};
}

inline std::string verdict_to_text(const InequalitySystem& system, const Verdict& verdict) {
  std::string out = "verdict: ";
  out += verdict.feasible ? "feasible" : "infeasible";
  out += "\n";
  out += "tight (" + std::to_string(verdict.tight.size()) + "):\n";
  for (RowRef ref : verdict.tight)
    out += "  " + system.row_name(ref) + ": " + describe_row(system, ref) + "\n";
  out += "violated (" + std::to_string(verdict.violated.size()) + "):\n";
  for (RowRef ref : verdict.violated)
    out += "  " + system.row_name(ref) + ": " + describe_row(system, ref) +
           "  slack=" + format_rational(verdict.margins[static_cast<size_t>(system.flat_index(ref))]) +
           "\n";
  return out;
}

inline json matrix_to_json(const CMatrix& M) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json re_row = json::array(), im_row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      re_row.push_back(M(i, j).real());
      im_row.push_back(M(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

inline json realization_to_json(const RealizationResult& result,
                                const VerificationReport* verification = nullptr) {
  json matrices = json::array();
  for (const auto& M : result.matrices) matrices.push_back(matrix_to_json(M));
  json j{{"found", result.found},
         {"residual", result.residual},
         {"iterations", result.iterations},
         {"restarts_used", result.restarts_used},
         {"sum_eigenvalues", result.sum_eigenvalues},
         {"matrices", std::move(matrices)}};
  if (verification) {
    j["verification"] = json{{"spectra_ok", verification->spectra_ok},
                             {"psd_ok", verification->psd_ok},
                             {"rank_ok", verification->rank_ok},
                             {"max_spectrum_deviation", verification->max_spectrum_deviation},
                             {"min_sum_eigenvalue", verification->min_sum_eigenvalue},
                             {"rank_excess_eigenvalue", verification->rank_excess_eigenvalue}};
  }
  return j;
}

}  // namespace horn
