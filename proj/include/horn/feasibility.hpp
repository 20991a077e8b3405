#pragma once

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "horn/rational.hpp"
#include "horn/system.hpp"

namespace horn {

/// A problem instance: m spectra of length n with exact rational entries.
/// Weak decrease is checked by the verdict, never assumed.
struct SpectrumInstance {
  int n = 0, m = 0, r = 0;
  std::vector<std::vector<Rational>> alpha;

  const Rational& entry(int s, int i) const {  // 1-based (s, i)
    return alpha.at(static_cast<size_t>(s - 1)).at(static_cast<size_t>(i - 1));
  }

  void validate() const {
    if (n < 1 || m < 1 || r < 0 || r > n)
      throw std::invalid_argument("instance: need n >= 1, m >= 1, 0 <= r <= n");
    if (static_cast<int>(alpha.size()) != m)
      throw std::invalid_argument("instance: expected m spectra");
    for (const auto& tuple : alpha)
      if (static_cast<int>(tuple.size()) != n)
        throw std::invalid_argument("instance: expected n entries per spectrum");
  }
};

struct Verdict {
  bool feasible = false;
  std::vector<DaggerRow> dagger_violations;
  std::vector<RowRef> tight;     // rows with zero slack
  std::vector<RowRef> violated;  // rows with negative slack
  std::vector<Rational> margins;  // slack per row, in the system's flat order
};

/// Positions (s, i) where alpha_i(s) < alpha_{i+1}(s).
inline std::vector<DaggerRow> check_dagger(const SpectrumInstance& inst) {
  inst.validate();
  std::vector<DaggerRow> violations;
  for (int s = 1; s <= inst.m; ++s)
    for (int i = 1; i <= inst.n - 1; ++i)
      if (inst.entry(s, i) < inst.entry(s, i + 1)) violations.push_back({s, i});
  return violations;
}

/// Signed slack, oriented so that satisfied means slack >= 0.
inline Rational evaluate(const HornInequality& ineq, const SpectrumInstance& inst) {
  if (ineq.n != inst.n || ineq.m != inst.m)
    throw std::invalid_argument("evaluate: inequality and instance dimensions differ");
  if (ineq.kind == IneqKind::RankBound && !ineq.subsets.empty() &&
      ineq.subsets.front().ambient() != inst.n - inst.r)
    throw std::invalid_argument("evaluate: rank row ambient does not match n-r");
  Rational sum = 0;
  for (int s = 1; s <= ineq.m; ++s) {
    const auto& subset = ineq.subsets.at(static_cast<size_t>(s - 1));
    for (int e : subset.elements()) {
      int i = (ineq.kind == IneqKind::Major) ? e : ineq.n + 1 - e;
      sum += inst.entry(s, i);
    }
  }
  return (ineq.kind == IneqKind::Major) ? sum : -sum;
}

inline Rational evaluate(const DaggerRow& row, const SpectrumInstance& inst) {
  return inst.entry(row.s, row.i) - inst.entry(row.s, row.i + 1);
}

inline Rational row_slack(const InequalitySystem& system, RowRef ref,
                          const SpectrumInstance& inst) {
  switch (ref.kind) {
    case RowKind::Dagger:
      return evaluate(system.dagger_rows.at(static_cast<size_t>(ref.index)), inst);
    case RowKind::Major:
      return evaluate(system.majors.at(static_cast<size_t>(ref.index)), inst);
    case RowKind::RankBound:
      return evaluate(system.rank_bounds.at(static_cast<size_t>(ref.index)), inst);
  }
  throw std::logic_error("bad row kind");
}

/// Exact verdict of the given system on the instance.
inline Verdict check_with_system(const SpectrumInstance& inst, const InequalitySystem& system) {
  inst.validate();
  if (system.n != inst.n || system.m != inst.m)
    throw std::invalid_argument("check: system and instance dimensions differ");
  Verdict verdict;
  verdict.margins.reserve(static_cast<size_t>(system.total_rows()));
  for (int flat = 0; flat < system.total_rows(); ++flat) {
    RowRef ref = system.row_ref(flat);
    Rational slack = row_slack(system, ref, inst);
    if (slack == 0) verdict.tight.push_back(ref);
    if (slack < 0) {
      verdict.violated.push_back(ref);
      if (ref.kind == RowKind::Dagger)
        verdict.dagger_violations.push_back(
            system.dagger_rows.at(static_cast<size_t>(ref.index)));
    }
    verdict.margins.push_back(std::move(slack));
  }
  verdict.feasible = verdict.violated.empty();
  return verdict;
}

/// Cached canonical systems keyed by (n, m, r); the extended flag selects the
/// S-indexed variant.
inline const InequalitySystem& cached_system(int n, int m, int r, bool extended = false) {
  static std::map<std::tuple<int, int, int, bool>, InequalitySystem> cache;
  static std::mutex mutex;
  std::scoped_lock lock(mutex);
  auto key = std::make_tuple(n, m, r, extended);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, extended ? build_extended_system(n, m, r) : build_system(n, m, r))
             .first;
  return it->second;
}

/// Decides whether Hermitian matrices with the given spectra exist whose sum
/// is positive semidefinite of rank at most r.
inline Verdict check(const SpectrumInstance& inst) {
  inst.validate();
  return check_with_system(inst, cached_system(inst.n, inst.m, inst.r));
}

/// Verdict against the larger S-indexed system; cross-check only.
inline Verdict check_extended(const SpectrumInstance& inst) {
  inst.validate();
  return check_with_system(inst, cached_system(inst.n, inst.m, inst.r, /*extended=*/true));
}

/// The negated-tail reduction: (-alpha_n(s) >= ... >= -alpha_{r+1}(s)).
inline SpectrumInstance negated_tail_instance(const SpectrumInstance& inst) {
  if (inst.r >= inst.n) throw std::invalid_argument("negated tail: need r < n");
  SpectrumInstance reduced;
  reduced.n = inst.n - inst.r;
  reduced.m = inst.m;
  reduced.r = inst.n - inst.r;
  reduced.alpha.resize(static_cast<size_t>(inst.m));
  for (int s = 1; s <= inst.m; ++s) {
    auto& tuple = reduced.alpha[static_cast<size_t>(s - 1)];
    tuple.reserve(static_cast<size_t>(reduced.n));
    for (int i = inst.n; i >= inst.r + 1; --i) tuple.push_back(-inst.entry(s, i));
  }
  return reduced;
}

/// Splits the problem into the unconstrained-rank part and the negated-tail
/// part; both feasible iff check(inst) is feasible.
inline std::pair<Verdict, Verdict> rank_reduction_split(const SpectrumInstance& inst) {
  inst.validate();
  if (inst.r >= inst.n) throw std::invalid_argument("rank_reduction_split: need r < n");
  SpectrumInstance psd = inst;
  psd.r = inst.n;
  Verdict first = check(psd);
  Verdict second = check(negated_tail_instance(inst));
  return {std::move(first), std::move(second)};
}

/// Scales the instance so the largest absolute entry is 1 (no-op if zero).
inline SpectrumInstance normalized(const SpectrumInstance& inst) {
  Rational scale = 0;
  for (const auto& tuple : inst.alpha)
    for (const auto& value : tuple)
      if (Rational a = abs(value); a > scale) scale = a;
  if (scale == 0) return inst;
  SpectrumInstance out = inst;
  for (auto& tuple : out.alpha)
    for (auto& value : tuple) value /= scale;
  return out;
}

}  // namespace horn
