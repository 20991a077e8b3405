#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "horn/rational.hpp"

namespace horn {

enum class Sense { LessEq, GreaterEq, Equal };

struct LpRow {
  std::vector<Rational> coeffs;
  Sense sense;
  Rational rhs;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> point;  // structural variable values
};

/// Exact rational linear program over free variables: maximize c.x subject
/// to rows a.x {<=,=,>=} b. Desk scale only.
class LinearProgram {
 public:
  explicit LinearProgram(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 1 || num_vars > 60)
      throw std::invalid_argument("LinearProgram: need 1 <= variables <= 60");
  }

  void add_row(std::vector<Rational> coeffs, Sense sense, Rational rhs) {
    if (static_cast<int>(coeffs.size()) != num_vars_)
      throw std::invalid_argument("LinearProgram: row width mismatch");
    if (static_cast<int>(rows_.size()) >= 200)
      throw std::invalid_argument("LinearProgram: more than 200 rows");
    rows_.push_back({std::move(coeffs), sense, std::move(rhs)});
  }

  void set_objective(std::vector<Rational> objective) {
    if (static_cast<int>(objective.size()) != num_vars_)
      throw std::invalid_argument("LinearProgram: objective width mismatch");
    objective_ = std::move(objective);
  }

  int num_vars() const { return num_vars_; }
  const std::vector<LpRow>& rows() const { return rows_; }
  const std::vector<Rational>& objective() const { return objective_; }

 private:
  int num_vars_;
  std::vector<LpRow> rows_;
  std::vector<Rational> objective_;
};

namespace detail {

/// Dense rational tableau with Bland's rule; maximization form.
struct SimplexTableau {
  int cols = 0;                             // excludes the rhs slot
  std::vector<std::vector<Rational>> rows;  // each of length cols + 1
  std::vector<int> basis;                   // basic column per row
  std::vector<Rational> obj;                // reduced costs; obj[cols] = -value

  void pivot(int pr, int pc) {
    auto& prow = rows[static_cast<size_t>(pr)];
    Rational inv = prow[static_cast<size_t>(pc)];
    for (auto& v : prow) v /= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == pr) continue;
      Rational factor = rows[i][static_cast<size_t>(pc)];
      if (factor == 0) continue;
      for (size_t j = 0; j <= static_cast<size_t>(cols); ++j)
        rows[i][j] -= factor * prow[j];
    }
    Rational factor = obj[static_cast<size_t>(pc)];
    if (factor != 0)
      for (size_t j = 0; j <= static_cast<size_t>(cols); ++j) obj[j] -= factor * prow[j];
    basis[static_cast<size_t>(pr)] = pc;
  }

  void price_out(const std::vector<Rational>& costs) {
    obj.assign(static_cast<size_t>(cols) + 1, Rational(0));
    for (int j = 0; j < cols; ++j) obj[static_cast<size_t>(j)] = costs[static_cast<size_t>(j)];
    for (size_t i = 0; i < rows.size(); ++i) {
      const Rational& cb = costs[static_cast<size_t>(basis[i])];
      if (cb == 0) continue;
      for (size_t j = 0; j <= static_cast<size_t>(cols); ++j) obj[j] -= cb * rows[i][j];
    }
  }

  /// Bland's rule iteration until optimal or unbounded; allowed_cols bounds
  /// the columns that may enter.
  LpStatus iterate(int allowed_cols) {
    for (long step = 0; step < 500000; ++step) {
      int entering = -1;
      for (int j = 0; j < allowed_cols; ++j)
        if (obj[static_cast<size_t>(j)] > 0) {
          entering = j;
          break;
        }
      if (entering < 0) return LpStatus::Optimal;

      int leaving = -1;
      Rational best_ratio;
      for (size_t i = 0; i < rows.size(); ++i) {
        const Rational& a = rows[i][static_cast<size_t>(entering)];
        if (a <= 0) continue;
        Rational ratio = rows[i][static_cast<size_t>(cols)] / a;
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[static_cast<size_t>(leaving)])) {
          leaving = static_cast<int>(i);
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return LpStatus::Unbounded;
      pivot(leaving, entering);
    }
    throw std::runtime_error("simplex: iteration limit exceeded");
  }
};

}  // namespace detail

/// Two-phase primal simplex with Bland's rule; exact rational arithmetic.
inline LpSolution simplex_solve(const LinearProgram& lp) {
  const int V = lp.num_vars();
  const int R = static_cast<int>(lp.rows().size());

  // columns: V positive parts, V negative parts, one slack/surplus per
  // inequality row, then artificials
  int slack_count = 0;
  for (const auto& row : lp.rows())
    if (row.sense != Sense::Equal) ++slack_count;

  auto effective_sense = [](const LpRow& row) {
    if (row.rhs >= 0 || row.sense == Sense::Equal) return row.sense;
    return row.sense == Sense::LessEq ? Sense::GreaterEq : Sense::LessEq;
  };
  int artificial_count = 0;
  for (const auto& row : lp.rows())
    if (effective_sense(row) != Sense::LessEq) ++artificial_count;

  const int split = 2 * V;
  const int first_slack = split;
  const int first_artificial = first_slack + slack_count;
  const int total_cols = first_artificial + artificial_count;

  detail::SimplexTableau tab;
  tab.cols = total_cols;
  tab.rows.assign(static_cast<size_t>(R),
                  std::vector<Rational>(static_cast<size_t>(total_cols) + 1, Rational(0)));
  tab.basis.assign(static_cast<size_t>(R), -1);

  int slack_cursor = first_slack;
  int artificial_cursor = first_artificial;
  for (int i = 0; i < R; ++i) {
    const auto& row = lp.rows()[static_cast<size_t>(i)];
    const bool flip = row.rhs < 0;
    const Sense sense = effective_sense(row);

    auto& trow = tab.rows[static_cast<size_t>(i)];
    for (int j = 0; j < V; ++j) {
      Rational c = row.coeffs[static_cast<size_t>(j)];
      if (flip) c = -c;
      trow[static_cast<size_t>(j)] = c;
      trow[static_cast<size_t>(V + j)] = -c;
    }
    trow[static_cast<size_t>(total_cols)] = flip ? -row.rhs : row.rhs;

    if (sense == Sense::LessEq) {
      trow[static_cast<size_t>(slack_cursor)] = 1;
      tab.basis[static_cast<size_t>(i)] = slack_cursor++;
    } else if (sense == Sense::GreaterEq) {
      trow[static_cast<size_t>(slack_cursor)] = -1;
      ++slack_cursor;
      trow[static_cast<size_t>(artificial_cursor)] = 1;
      tab.basis[static_cast<size_t>(i)] = artificial_cursor++;
    } else {
      trow[static_cast<size_t>(artificial_cursor)] = 1;
      tab.basis[static_cast<size_t>(i)] = artificial_cursor++;
    }
  }

  // phase 1: drive the artificials to zero
  if (artificial_count > 0) {
    std::vector<Rational> phase1(static_cast<size_t>(total_cols), Rational(0));
    for (int j = first_artificial; j < total_cols; ++j) phase1[static_cast<size_t>(j)] = -1;
    tab.price_out(phase1);
    LpStatus status = tab.iterate(total_cols);
    if (status != LpStatus::Optimal)
      throw std::runtime_error("simplex: phase 1 did not terminate at an optimum");
    if (-tab.obj[static_cast<size_t>(tab.cols)] < 0) {
      LpSolution out;
      out.status = LpStatus::Infeasible;
      return out;
    }
    // remove basic artificials (their value is zero): pivot out where
    // possible, drop redundant rows otherwise
    for (int i = static_cast<int>(tab.rows.size()) - 1; i >= 0; --i) {
      if (tab.basis[static_cast<size_t>(i)] < first_artificial) continue;
      int pivot_col = -1;
      for (int j = 0; j < first_artificial; ++j)
        if (tab.rows[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
          pivot_col = j;
          break;
        }
      if (pivot_col >= 0) {
        tab.pivot(i, pivot_col);
      } else {
        tab.rows.erase(tab.rows.begin() + i);
        tab.basis.erase(tab.basis.begin() + i);
      }
    }
  }

  // phase 2 on the original objective, artificial columns locked out
  std::vector<Rational> costs(static_cast<size_t>(total_cols), Rational(0));
  if (!lp.objective().empty()) {
    for (int j = 0; j < V; ++j) {
      costs[static_cast<size_t>(j)] = lp.objective()[static_cast<size_t>(j)];
      costs[static_cast<size_t>(V + j)] = -lp.objective()[static_cast<size_t>(j)];
    }
  }
  tab.price_out(costs);
  LpStatus status = tab.iterate(first_artificial);

  LpSolution out;
  out.status = status;
  if (status != LpStatus::Optimal) return out;
  out.value = -tab.obj[static_cast<size_t>(tab.cols)];
  out.point.assign(static_cast<size_t>(V), Rational(0));
  for (size_t i = 0; i < tab.rows.size(); ++i) {
    int b = tab.basis[i];
    const Rational& value = tab.rows[i][static_cast<size_t>(tab.cols)];
    if (b < V)
      out.point[static_cast<size_t>(b)] += value;
    else if (b < 2 * V)
      out.point[static_cast<size_t>(b - V)] -= value;
  }
  return out;
}

}  // namespace horn
