#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "horn/feasibility.hpp"
#include "horn/simplex.hpp"
#include "horn/system.hpp"

namespace horn {

enum class FacetMethod { PaperConstruction, LpSearch };

struct FacetReport {
  RowRef target{};
  bool tight_verified = false;
  bool all_others_strict = false;
  Rational delta;  // best guaranteed slack of the other rows at the witness
  SpectrumInstance witness;
  FacetMethod method = FacetMethod::LpSearch;

  bool certified() const { return tight_verified && all_others_strict; }
};

namespace detail {

inline SpectrumInstance instance_from_point(const InequalitySystem& system,
                                            const std::vector<Rational>& point) {
  SpectrumInstance inst;
  inst.n = system.n;
  inst.m = system.m;
  inst.r = system.r;
  inst.alpha.assign(static_cast<size_t>(system.m),
                    std::vector<Rational>(static_cast<size_t>(system.n)));
  for (int s = 0; s < system.m; ++s)
    for (int i = 0; i < system.n; ++i)
      inst.alpha[static_cast<size_t>(s)][static_cast<size_t>(i)] =
          point[static_cast<size_t>(s * system.n + i)];
  return inst;
}

inline std::vector<RowRef> all_rows(const InequalitySystem& system) {
  std::vector<RowRef> rows;
  rows.reserve(static_cast<size_t>(system.total_rows()));
  for (int flat = 0; flat < system.total_rows(); ++flat) rows.push_back(system.row_ref(flat));
  return rows;
}

}  // namespace detail

/// Searches for a witness instance on which the target row is an equality and
/// every other row of the system is strict: the target row is pinned to zero
/// and the minimum slack of the others is maximized inside the box
/// |alpha_i(s)| <= 1. The target defines a facet iff the optimum is positive.
inline FacetReport facet_witness(const InequalitySystem& system, RowRef target) {
  const int vars = system.n * system.m;
  LinearProgram lp(vars + 1);  // trailing variable is the minimum slack delta
  const int delta = vars;

  auto extended = [&](std::vector<Rational> coeffs, const Rational& delta_coeff) {
    coeffs.push_back(delta_coeff);
    return coeffs;
  };

  lp.add_row(extended(coefficient_vector(system, target), 0), Sense::Equal, 0);
  for (RowRef ref : detail::all_rows(system)) {
    if (ref == target) continue;
    lp.add_row(extended(coefficient_vector(system, ref), -1), Sense::GreaterEq, 0);
  }
  for (int j = 0; j < vars; ++j) {
    std::vector<Rational> unit(static_cast<size_t>(vars + 1), Rational(0));
    unit[static_cast<size_t>(j)] = 1;
    lp.add_row(unit, Sense::LessEq, 1);
    unit[static_cast<size_t>(j)] = -1;
    lp.add_row(unit, Sense::LessEq, 1);
  }
  {
    // keep the objective bounded even when no other row constrains delta
    std::vector<Rational> cap(static_cast<size_t>(vars + 1), Rational(0));
    cap[static_cast<size_t>(delta)] = 1;
    lp.add_row(cap, Sense::LessEq, Rational(vars + 1));
  }
  std::vector<Rational> objective(static_cast<size_t>(vars + 1), Rational(0));
  objective[static_cast<size_t>(delta)] = 1;
  lp.set_objective(objective);

  LpSolution solution = simplex_solve(lp);
  if (solution.status != LpStatus::Optimal)
    throw std::runtime_error("facet_witness: expected a bounded feasible program");

  FacetReport report;
  report.target = target;
  report.method = FacetMethod::LpSearch;
  report.delta = solution.value;
  std::vector<Rational> point(solution.point.begin(), solution.point.begin() + vars);
  report.witness = detail::instance_from_point(system, point);

  report.tight_verified = (row_slack(system, target, report.witness) == 0);
  report.all_others_strict = (solution.value > 0);
  for (RowRef ref : detail::all_rows(system)) {
    if (ref == target) continue;
    if (row_slack(system, ref, report.witness) <= 0) report.all_others_strict = false;
  }
  return report;
}

/// Wraps an explicitly constructed witness as a facet report: verifies that
/// the target is exactly tight and measures the smallest slack of the others.
inline FacetReport report_from_witness(const InequalitySystem& system, RowRef target,
                                       SpectrumInstance witness,
                                       FacetMethod method = FacetMethod::PaperConstruction) {
  FacetReport report;
  report.target = target;
  report.method = method;
  report.witness = std::move(witness);
  report.tight_verified = (row_slack(system, target, report.witness) == 0);
  bool first = true;
  for (RowRef ref : detail::all_rows(system)) {
    if (ref == target) continue;
    Rational slack = row_slack(system, ref, report.witness);
    if (first || slack < report.delta) {
      report.delta = std::move(slack);
      first = false;
    }
  }
  if (first) report.delta = 1;  // no other rows to separate from
  report.all_others_strict = report.delta > 0;
  return report;
}

struct IrredundancyResult {
  bool irredundant = false;
  std::optional<SpectrumInstance> certificate;  // satisfies the rest, violates the target
};

/// Looks for a point with slack >= 1 on every other row and slack <= -1 on
/// the target; such a point proves the target is not implied by the rest.
inline IrredundancyResult irredundancy(const InequalitySystem& system, RowRef target) {
  const int vars = system.n * system.m;
  LinearProgram lp(vars);
  for (RowRef ref : detail::all_rows(system)) {
    if (ref == target) continue;
    lp.add_row(coefficient_vector(system, ref), Sense::GreaterEq, 1);
  }
  lp.add_row(coefficient_vector(system, target), Sense::LessEq, -1);
  lp.set_objective(std::vector<Rational>(static_cast<size_t>(vars), Rational(0)));

  LpSolution solution = simplex_solve(lp);
  IrredundancyResult result;
  if (solution.status == LpStatus::Infeasible) return result;
  if (solution.status != LpStatus::Optimal)
    throw std::runtime_error("irredundancy: unexpected solver status");
  result.irredundant = true;
  result.certificate = detail::instance_from_point(system, solution.point);
  // exact audit of the certificate
  for (RowRef ref : detail::all_rows(system)) {
    Rational slack = row_slack(system, ref, *result.certificate);
    if (ref == target ? slack > -1 : slack < 1)
      throw std::runtime_error("irredundancy: certificate audit failed");
  }
  return result;
}

/// The explicit construction of a witness with alpha_{i0}(s0) = alpha_{i0+1}(s0)
/// and every other row strict: the tied factor gets the zero-sum tuple
/// (n-1, n-3, ..., 1-n) with the entries at i0, i0+1 replaced by their
/// average, every other factor gets (n, n-3, n-5, ..., 1-n). Verified
/// exactly before returning.
inline SpectrumInstance dagger_witness(int n, int m, int r, int s0, int i0) {
  if (m < 3 || r < 1 || r > n) throw std::invalid_argument("dagger_witness: need m >= 3, r >= 1");
  if (n < 2 || i0 < 1 || i0 > n - 1 || s0 < 1 || s0 > m)
    throw std::invalid_argument("dagger_witness: bad tie position");

  std::vector<Rational> tied(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) tied[static_cast<size_t>(j - 1)] = n + 1 - 2 * j;
  tied[static_cast<size_t>(i0 - 1)] = n - 2 * i0;
  tied[static_cast<size_t>(i0)] = n - 2 * i0;

  std::vector<Rational> other(static_cast<size_t>(n));
  other[0] = n;
  for (int j = 2; j <= n; ++j) other[static_cast<size_t>(j - 1)] = n + 1 - 2 * j;

  SpectrumInstance inst;
  inst.n = n;
  inst.m = m;
  inst.r = r;
  inst.alpha.assign(static_cast<size_t>(m), other);
  inst.alpha[static_cast<size_t>(s0 - 1)] = tied;

  const InequalitySystem& system = cached_system(n, m, r);
  Verdict verdict = check_with_system(inst, system);
  if (!verdict.feasible) throw std::runtime_error("dagger_witness: construction infeasible");
  for (RowRef ref : verdict.tight) {
    bool is_the_tie = ref.kind == RowKind::Dagger &&
                      system.dagger_rows.at(static_cast<size_t>(ref.index)) == DaggerRow{s0, i0};
    if (!is_the_tie) throw std::runtime_error("dagger_witness: unexpected tight row");
  }
  if (verdict.tight.size() != 1) throw std::runtime_error("dagger_witness: missing tie");
  return inst;
}

/// Witness making a rank row tight with everything else strict: a zero-sum
/// tuple family beta tight at the matching reduced major row is lifted to
/// alpha(s) = (N+r, ..., N+1, -beta_{n-r}(s), ..., -beta_1(s)); N doubles and
/// the final epsilon shift halves until the exact strictness audit passes.
inline SpectrumInstance rank_tight_witness(const InequalitySystem& system, RowRef target,
                                           std::optional<Rational> start = std::nullopt) {
  if (target.kind != RowKind::RankBound)
    throw std::invalid_argument("rank_tight_witness: target must be a rank row");
  const HornInequality& row = system.rank_bounds.at(static_cast<size_t>(target.index));
  const int n = system.n, m = system.m, r = system.r;
  const int reduced_n = n - r;
  const int x = row.t;

  // beta: strictly decreasing zero-sum tuples, tight exactly at the reduced
  // major row matching the target, strict elsewhere
  InequalitySystem reduced = cached_system(reduced_n, m, reduced_n);
  int reduced_target = -1;
  for (size_t k = 0; k < reduced.majors.size(); ++k)
    if (reduced.majors[k].subsets == row.subsets) reduced_target = static_cast<int>(k);
  if (reduced_target < 0)
    throw std::runtime_error("rank_tight_witness: no matching reduced major row");

  const int vars = reduced_n * m;
  LinearProgram lp(vars + 1);
  const int delta = vars;
  auto extended = [&](std::vector<Rational> coeffs, const Rational& delta_coeff) {
    coeffs.push_back(delta_coeff);
    return coeffs;
  };
  std::vector<Rational> trace(static_cast<size_t>(vars + 1), Rational(1));
  trace[static_cast<size_t>(delta)] = 0;
  lp.add_row(trace, Sense::Equal, 0);
  lp.add_row(extended(coefficient_vector(reduced.majors[static_cast<size_t>(reduced_target)]), 0),
             Sense::Equal, 0);
  for (RowRef ref : detail::all_rows(reduced)) {
    if (ref.kind == RowKind::Major) {
      if (ref.index == reduced_target) continue;
      // the full-cardinality major is the trace row, already pinned to zero
      if (reduced.majors[static_cast<size_t>(ref.index)].t == reduced_n) continue;
    }
    lp.add_row(extended(coefficient_vector(reduced, ref), -1), Sense::GreaterEq, 0);
  }
  for (int j = 0; j < vars; ++j) {
    std::vector<Rational> unit(static_cast<size_t>(vars + 1), Rational(0));
    unit[static_cast<size_t>(j)] = 1;
    lp.add_row(unit, Sense::LessEq, 1);
    unit[static_cast<size_t>(j)] = -1;
    lp.add_row(unit, Sense::LessEq, 1);
  }
  std::vector<Rational> cap(static_cast<size_t>(vars + 1), Rational(0));
  cap[static_cast<size_t>(delta)] = 1;
  lp.add_row(cap, Sense::LessEq, 1);
  std::vector<Rational> objective(static_cast<size_t>(vars + 1), Rational(0));
  objective[static_cast<size_t>(delta)] = 1;
  lp.set_objective(objective);

  LpSolution solution = simplex_solve(lp);
  if (solution.status != LpStatus::Optimal || solution.value <= 0)
    throw std::runtime_error("rank_tight_witness: no tight beta witness found");

  std::vector<std::vector<Rational>> beta(static_cast<size_t>(m));
  Rational beta_max = 0;
  for (int s = 0; s < m; ++s) {
    beta[static_cast<size_t>(s)].resize(static_cast<size_t>(reduced_n));
    for (int p = 0; p < reduced_n; ++p) {
      Rational value = solution.point[static_cast<size_t>(s * reduced_n + p)];
      if (Rational a = abs(value); a > beta_max) beta_max = a;
      beta[static_cast<size_t>(s)][static_cast<size_t>(p)] = value;
    }
  }

  int p0 = 0;  // shift position (1-based) when the target is not the full row
  if (x != reduced_n) {
    for (int p = 1; p <= reduced_n; ++p)
      if (!row.subsets[0].contains(p)) {
        p0 = p;
        break;
      }
  }

  Rational N = start.value_or(Rational(1) + Rational(m * n) * (Rational(1) + beta_max));
  for (int n_iter = 0; n_iter < 60; ++n_iter, N *= 2) {
    Rational epsilon = 1;
    for (int e_iter = 0; e_iter < 60; ++e_iter, epsilon /= 2) {
      SpectrumInstance inst;
      inst.n = n;
      inst.m = m;
      inst.r = r;
      inst.alpha.assign(static_cast<size_t>(m), std::vector<Rational>(static_cast<size_t>(n)));
      for (int s = 0; s < m; ++s) {
        for (int i = 1; i <= r; ++i)
          inst.alpha[static_cast<size_t>(s)][static_cast<size_t>(i - 1)] = N + (r - i + 1);
        for (int i = r + 1; i <= n; ++i)
          inst.alpha[static_cast<size_t>(s)][static_cast<size_t>(i - 1)] =
              -beta[static_cast<size_t>(s)][static_cast<size_t>(n - i)];
      }
      if (p0 > 0)
        inst.alpha[0][static_cast<size_t>(n - p0)] -= epsilon;  // entry n+1-p0 of factor 1

      Verdict verdict = check_with_system(inst, system);
      bool ok = verdict.feasible && verdict.tight.size() == 1 &&
                verdict.tight[0] == target;
      if (ok) return inst;
      if (p0 == 0) break;  // nothing to shrink; only N can help
    }
  }
  throw std::runtime_error("rank_tight_witness: audit failed after N/epsilon escalation");
}

}  // namespace horn
