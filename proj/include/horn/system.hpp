#pragma once

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "horn/lr.hpp"
#include "horn/rational.hpp"
#include "horn/schubert.hpp"

namespace horn {

enum class IneqKind { Major, RankBound };

/// One inequality row. Major rows read sum_s sum_{i in I(s)} alpha_i(s) >= 0
/// with subsets in ambient n. RankBound rows keep their subsets in ambient
/// n-r; an element p stands for the entry alpha_{n+1-p}(s), and the row reads
/// sum_s sum_{p in P(s)} alpha_{n+1-p}(s) <= 0.
struct HornInequality {
  IneqKind kind;
  int t;
  std::vector<SchubertIndex> subsets;
  int n, m, r;

  bool operator==(const HornInequality&) const = default;
};

/// Ordering row alpha_i(s) >= alpha_{i+1}(s); s, i are 1-based.
struct DaggerRow {
  int s, i;
  bool operator==(const DaggerRow&) const = default;
};

enum class RowKind { Dagger, Major, RankBound };

/// Reference to one row of an InequalitySystem (index into the kind's list).
struct RowRef {
  RowKind kind;
  int index;
  bool operator==(const RowRef&) const = default;
  auto operator<=>(const RowRef&) const = default;
};

struct InequalitySystem {
  int n = 0, m = 0, r = 0;
  std::vector<DaggerRow> dagger_rows;
  std::vector<HornInequality> majors;
  std::vector<HornInequality> rank_bounds;

  int total_rows() const {
    return static_cast<int>(dagger_rows.size() + majors.size() + rank_bounds.size());
  }

  /// Flat order: dagger rows, then majors, then rank bounds.
  RowRef row_ref(int flat) const {
    int d = static_cast<int>(dagger_rows.size());
    int mj = static_cast<int>(majors.size());
    if (flat < 0 || flat >= total_rows()) throw std::out_of_range("row index");
    if (flat < d) return {RowKind::Dagger, flat};
    if (flat < d + mj) return {RowKind::Major, flat - d};
    return {RowKind::RankBound, flat - d - mj};
  }

  int flat_index(RowRef ref) const {
    int d = static_cast<int>(dagger_rows.size());
    int mj = static_cast<int>(majors.size());
    switch (ref.kind) {
      case RowKind::Dagger: return ref.index;
      case RowKind::Major: return d + ref.index;
      case RowKind::RankBound: return d + mj + ref.index;
    }
    throw std::logic_error("bad row kind");
  }

  std::string row_name(RowRef ref) const {
    switch (ref.kind) {
      case RowKind::Dagger: {
        const auto& row = dagger_rows.at(static_cast<size_t>(ref.index));
        return "dagger(s=" + std::to_string(row.s) + ",i=" + std::to_string(row.i) + ")";
      }
      case RowKind::Major: return "major[" + std::to_string(ref.index) + "]";
      case RowKind::RankBound: return "rank[" + std::to_string(ref.index) + "]";
    }
    throw std::logic_error("bad row kind");
  }
};

struct guardrail_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Candidate budget for enumeration; SPECTRAL_HORN_MAX_CANDIDATES overrides.
inline long long enumeration_guardrail() {
  if (const char* env = std::getenv("SPECTRAL_HORN_MAX_CANDIDATES")) {
    long long value = std::atoll(env);
    if (value > 0) return value;
  }
  return 10'000'000;
}

namespace detail {

inline void ensure_desk_scale(int n, int t, int m) {
  long long limit = enumeration_guardrail();
  long double per_slot = 1.0L;
  for (int i = 1; i <= t; ++i)
    per_slot *= static_cast<long double>(n - t + i) / static_cast<long double>(i);
  long double count = 1.0L;
  for (int s = 0; s < m && count <= static_cast<long double>(limit); ++s) count *= per_slot;
  if (count > static_cast<long double>(limit))
    throw guardrail_error("candidate count C(" + std::to_string(n) + "," + std::to_string(t) +
                          ")^" + std::to_string(m) + " exceeds guardrail " +
                          std::to_string(limit) +
                          " (set SPECTRAL_HORN_MAX_CANDIDATES to override)");
}

inline std::vector<SchubertIndex> all_subsets(int n, int t) {
  std::vector<SchubertIndex> out;
  std::vector<int> current(static_cast<size_t>(t));
  for (int i = 0; i < t; ++i) current[static_cast<size_t>(i)] = i + 1;
  while (true) {
    out.emplace_back(n, current);
    int j = t - 1;
    while (j >= 0 && current[static_cast<size_t>(j)] == n - t + 1 + j) --j;
    if (j < 0) break;
    ++current[static_cast<size_t>(j)];
    for (int l = j + 1; l < t; ++l)
      current[static_cast<size_t>(l)] = current[static_cast<size_t>(l) - 1] + 1;
  }
  return out;
}

/// Enumerates sequences of m cardinality-t subsets of [n] in lexicographic
/// order, keeping those whose element sums land in [min_total, max_total],
/// and applies the final predicate.
template <typename Predicate>
std::vector<std::vector<SchubertIndex>> enumerate_sequences(int n, int t, int m,
                                                            int min_total, int max_total,
                                                            Predicate&& keep) {
  auto subsets = all_subsets(n, t);
  std::vector<int> sums;
  sums.reserve(subsets.size());
  for (const auto& subset : subsets) {
    int sum = 0;
    for (int e : subset.elements()) sum += e;
    sums.push_back(sum);
  }
  const int slot_min = t * (t + 1) / 2;
  const int slot_max = t * n - t * (t - 1) / 2;

  std::vector<std::vector<SchubertIndex>> result;
  std::vector<const SchubertIndex*> chosen(static_cast<size_t>(m));
  auto recurse = [&](auto&& self, int slot, int partial) -> void {
    if (slot == m) {
      if (partial < min_total || partial > max_total) return;
      std::vector<SchubertIndex> seq;
      seq.reserve(static_cast<size_t>(m));
      for (const auto* p : chosen) seq.push_back(*p);
      if (keep(seq)) result.push_back(std::move(seq));
      return;
    }
    int slots_left = m - slot - 1;
    for (size_t idx = 0; idx < subsets.size(); ++idx) {
      int next = partial + sums[idx];
      if (next + slots_left * slot_min > max_total) continue;
      if (next + slots_left * slot_max < min_total) continue;
      chosen[static_cast<size_t>(slot)] = &subsets[idx];
      self(self, slot + 1, next);
    }
  };
  recurse(recurse, 0, 0);
  return result;
}

}  // namespace detail

/// All sequences (I(1),...,I(m)) of cardinality-t subsets of [n] whose
/// Schubert product equals the point class, in lexicographic order.
/// Candidates are pre-filtered by the degree identity
/// sum_s sum_i i = t(n-t) + m*t(t+1)/2.
inline std::vector<std::vector<SchubertIndex>> enumerate_R(int n, int t, int m) {
  if (n < 1 || t < 1 || t > n || m < 1) throw std::invalid_argument("enumerate_R: bad range");
  detail::ensure_desk_scale(n, t, m);
  const int target = t * (n - t) + m * (t * (t + 1) / 2);
  return detail::enumerate_sequences(n, t, m, target, target, [](const auto& seq) {
    return is_point_class(seq);
  });
}

/// All sequences with nonzero Schubert product, in lexicographic order.
inline std::vector<std::vector<SchubertIndex>> enumerate_S(int n, int t, int m) {
  if (n < 1 || t < 1 || t > n || m < 1) throw std::invalid_argument("enumerate_S: bad range");
  detail::ensure_desk_scale(n, t, m);
  const int max_total = t * (n - t) + m * (t * (t + 1) / 2);
  return detail::enumerate_sequences(n, t, m, 0, max_total, [](const auto& seq) {
    return is_nonzero_product(seq);
  });
}

namespace detail {

inline std::vector<DaggerRow> make_dagger_rows(int n, int m) {
  std::vector<DaggerRow> rows;
  rows.reserve(static_cast<size_t>(m) * static_cast<size_t>(n > 0 ? n - 1 : 0));
  for (int s = 1; s <= m; ++s)
    for (int i = 1; i <= n - 1; ++i) rows.push_back({s, i});
  return rows;
}

template <typename Enumerator>
InequalitySystem assemble_system(int n, int m, int r, Enumerator&& enumerate) {
  if (n < 1 || m < 1 || r < 0 || r > n)
    throw std::invalid_argument("system: need n >= 1, m >= 1, 0 <= r <= n");
  if (n > 8 && std::getenv("SPECTRAL_HORN_MAX_CANDIDATES") == nullptr)
    throw guardrail_error("n > 8 refused (set SPECTRAL_HORN_MAX_CANDIDATES to override)");

  InequalitySystem system;
  system.n = n;
  system.m = m;
  system.r = r;
  system.dagger_rows = make_dagger_rows(n, m);
  for (int t = 1; t <= n; ++t)
    for (auto& seq : enumerate(n, t, m))
      system.majors.push_back({IneqKind::Major, t, std::move(seq), n, m, r});
  for (int t = 1; t <= n - r; ++t)
    for (auto& seq : enumerate(n - r, t, m))
      system.rank_bounds.push_back({IneqKind::RankBound, t, std::move(seq), n, m, r});
  return system;
}

}  // namespace detail

/// The full system for (n, m, r): dagger rows, majors indexed by R^n(m), and
/// rank bounds indexed by R^{n-r}(m). Rows are in canonical order
/// (t ascending, then lexicographic on subset sequences).
inline InequalitySystem build_system(int n, int m, int r) {
  return detail::assemble_system(n, m, r, [](int nn, int tt, int mm) {
    return enumerate_R(nn, tt, mm);
  });
}

/// The enlarged system indexed by S^n(m) and S^{n-r}(m); used as a
/// cross-check, never as the primary verdict.
inline InequalitySystem build_extended_system(int n, int m, int r) {
  return detail::assemble_system(n, m, r, [](int nn, int tt, int mm) {
    return enumerate_S(nn, tt, mm);
  });
}

/// The m = 2 system of classical Weyl rows: alpha_i(1) + alpha_j(2) >= 0
/// for i+j = n+1 and alpha_i(1) + alpha_j(2) <= 0 for i+j = n+r+1, as
/// singleton-index HornInequality rows.
inline InequalitySystem weyl_system(int n, int r) {
  if (n < 1 || r < 0 || r > n)
    throw std::invalid_argument("weyl_system: need n >= 1, 0 <= r <= n");
  InequalitySystem system;
  system.n = n;
  system.m = 2;
  system.r = r;
  system.dagger_rows = detail::make_dagger_rows(n, 2);
  for (int i = 1; i <= n; ++i) {
    std::vector<SchubertIndex> subsets{SchubertIndex(n, {i}), SchubertIndex(n, {n + 1 - i})};
    system.majors.push_back({IneqKind::Major, 1, std::move(subsets), n, 2, r});
  }
  for (int p = 1; p <= n - r; ++p) {
    std::vector<SchubertIndex> subsets{SchubertIndex(n - r, {p}),
                                       SchubertIndex(n - r, {n - r + 1 - p})};
    system.rank_bounds.push_back({IneqKind::RankBound, 1, std::move(subsets), n, 2, r});
  }
  return system;
}

/// Row coefficients as a length m*n vector, oriented so the row reads
/// c . alpha >= 0; position (s, i) maps to (s-1)*n + (i-1).
inline std::vector<Rational> coefficient_vector(const HornInequality& ineq) {
  std::vector<Rational> c(static_cast<size_t>(ineq.m) * static_cast<size_t>(ineq.n));
  for (int s = 1; s <= ineq.m; ++s) {
    const auto& subset = ineq.subsets.at(static_cast<size_t>(s - 1));
    for (int e : subset.elements()) {
      int i = (ineq.kind == IneqKind::Major) ? e : ineq.n + 1 - e;
      Rational& slot = c[static_cast<size_t>((s - 1) * ineq.n + (i - 1))];
      slot += (ineq.kind == IneqKind::Major) ? 1 : -1;
    }
  }
  return c;
}

inline std::vector<Rational> coefficient_vector(const DaggerRow& row, int n, int m) {
  std::vector<Rational> c(static_cast<size_t>(m) * static_cast<size_t>(n));
  c[static_cast<size_t>((row.s - 1) * n + (row.i - 1))] = 1;
  c[static_cast<size_t>((row.s - 1) * n + row.i)] = -1;
  return c;
}

inline std::vector<Rational> coefficient_vector(const InequalitySystem& system, RowRef ref) {
  switch (ref.kind) {
    case RowKind::Dagger:
      return coefficient_vector(system.dagger_rows.at(static_cast<size_t>(ref.index)),
                                system.n, system.m);
    case RowKind::Major:
      return coefficient_vector(system.majors.at(static_cast<size_t>(ref.index)));
    case RowKind::RankBound:
      return coefficient_vector(system.rank_bounds.at(static_cast<size_t>(ref.index)));
  }
  throw std::logic_error("bad row kind");
}

/// Index-level bijection between the rank bounds of (n, m, r) and the majors
/// of the (n-r, m) system; the pairing realizes the identification of the
/// rank rows with the majors for the negated-tail tuples.
struct RankReductionPairing {
  int n, m, r;
  std::vector<std::pair<int, int>> pairs;  // (rank index, major index in n-r system)
};

inline RankReductionPairing rank_reduction_pairing(int n, int m, int r) {
  if (r < 0 || r >= n) throw std::invalid_argument("rank_reduction_pairing: need 0 <= r < n");
  InequalitySystem full = build_system(n, m, r);
  InequalitySystem reduced = build_system(n - r, m, n - r);

  std::map<std::vector<SchubertIndex>, int> major_index;
  for (size_t k = 0; k < reduced.majors.size(); ++k)
    major_index.emplace(reduced.majors[k].subsets, static_cast<int>(k));

  RankReductionPairing pairing{n, m, r, {}};
  std::vector<bool> used(reduced.majors.size(), false);
  for (size_t k = 0; k < full.rank_bounds.size(); ++k) {
    auto it = major_index.find(full.rank_bounds[k].subsets);
    if (it == major_index.end())
      throw std::runtime_error("rank_reduction_pairing: unpaired rank row " + std::to_string(k));
    used[static_cast<size_t>(it->second)] = true;
    pairing.pairs.emplace_back(static_cast<int>(k), it->second);
  }
  for (size_t k = 0; k < used.size(); ++k)
    if (!used[k])
      throw std::runtime_error("rank_reduction_pairing: unpaired major row " + std::to_string(k));
  return pairing;
}

}  // namespace horn
