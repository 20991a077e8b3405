#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "horn/partition.hpp"
#include "horn/rational.hpp"
#include "horn/schubert.hpp"

namespace horn {

/// Schur expansion of a product, as partition -> positive coefficient.
using SchurExpansion = std::map<Partition, Integer>;

namespace detail {

/// Counts skew semistandard tableaux of shape nu/lambda with content mu whose
/// reverse reading word (rows top to bottom, each row right to left) is a
/// lattice word. This is the Littlewood-Richardson coefficient c^nu_{lambda,mu}.
inline Integer lr_tableau_count(const Partition& nu, const Partition& lambda,
                                const Partition& mu) {
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  if (nu.weight() != lambda.weight() + mu.weight()) return 0;
  if (mu.empty()) return 1;

  struct Cell {
    int r, c;
  };
  std::vector<Cell> cells;  // reverse reading order
  for (int r = 0; r < nu.length(); ++r)
    for (int c = nu.part(r) - 1; c >= lambda.part(r); --c)
      cells.push_back({r, c});

  const int k = mu.length();
  std::vector<std::vector<int>> filled(static_cast<size_t>(nu.length()));
  for (int r = 0; r < nu.length(); ++r)
    filled[static_cast<size_t>(r)].assign(static_cast<size_t>(nu.part(r)), 0);
  std::vector<int> count(static_cast<size_t>(k + 1), 0);

  Integer total = 0;
  auto fill = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    auto [r, c] = cells[idx];
    int hi = k;
    if (c + 1 < nu.part(r)) hi = filled[static_cast<size_t>(r)][static_cast<size_t>(c + 1)];
    int lo = 1;
    if (r >= 1 && c >= lambda.part(r - 1))
      lo = filled[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (count[static_cast<size_t>(v)] >= mu.part(v - 1)) continue;
      if (v > 1 && count[static_cast<size_t>(v)] >= count[static_cast<size_t>(v - 1)])
        continue;  // lattice word prefix condition
      filled[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      ++count[static_cast<size_t>(v)];
      self(self, idx + 1);
      --count[static_cast<size_t>(v)];
    }
  };
  fill(fill, 0);
  return total;
}

}  // namespace detail

/// All (nu, c^nu_{lambda,mu}) with positive coefficient and nu inside bound.
/// Every nu satisfies |nu| = |lambda| + |mu|.
inline SchurExpansion lr_expand(const Partition& lambda, const Partition& mu,
                                const RectangleBound& bound) {
  if (!lambda.fits(bound) || !mu.fits(bound))
    throw std::invalid_argument("lr_expand: partition does not fit bound");
  SchurExpansion result;
  const int weight = lambda.weight() + mu.weight();
  if (weight > bound.rows * bound.cols) return result;

  // suffix sums of lambda, for budget pruning while enumerating supershapes
  std::vector<int> lambda_suffix(static_cast<size_t>(bound.rows) + 1, 0);
  for (int row = bound.rows - 1; row >= 0; --row)
    lambda_suffix[static_cast<size_t>(row)] =
        lambda_suffix[static_cast<size_t>(row) + 1] + lambda.part(row);

  std::vector<int> rows(static_cast<size_t>(bound.rows), 0);
  auto enumerate = [&](auto&& self, int row, int remaining) -> void {
    if (row == bound.rows) {
      if (remaining == 0) {
        Partition nu{std::vector<int>(rows)};
        Integer c = detail::lr_tableau_count(nu, lambda, mu);
        if (c > 0) result.emplace(std::move(nu), std::move(c));
      }
      return;
    }
    const int prev = (row == 0) ? bound.cols : rows[static_cast<size_t>(row) - 1];
    const int rows_left = bound.rows - row - 1;
    for (int v = lambda.part(row); v <= prev; ++v) {
      const int rest = remaining - v;
      if (rest < lambda_suffix[static_cast<size_t>(row) + 1]) break;
      if (rest > rows_left * v) continue;
      rows[static_cast<size_t>(row)] = v;
      self(self, row + 1, rest);
    }
  };
  enumerate(enumerate, 0, weight);
  return result;
}

/// Iterated rectangle-truncated Schur product of the given factors.
inline SchurExpansion expand_product(std::span<const Partition> lambdas,
                                     const RectangleBound& bound) {
  SchurExpansion current;
  current.emplace(Partition{}, Integer(1));
  for (const Partition& lambda : lambdas) {
    if (!lambda.fits(bound))
      throw std::invalid_argument("expand_product: partition does not fit bound");
    SchurExpansion next;
    for (const auto& [nu, c] : current)
      for (auto& [rho, d] : lr_expand(nu, lambda, bound)) next[rho] += c * d;
    current = std::move(next);
    if (current.empty()) break;
  }
  return current;
}

/// Coefficient of s_target in the rectangle-truncated product of the factors.
inline Integer product_coefficient(std::span<const Partition> lambdas,
                                   const RectangleBound& bound, const Partition& target) {
  if (!target.fits(bound))
    throw std::invalid_argument("product_coefficient: target does not fit bound");
  int degree = 0;
  for (const Partition& lambda : lambdas) {
    if (!lambda.fits(bound))
      throw std::invalid_argument("product_coefficient: factor does not fit bound");
    degree += lambda.weight();
  }
  if (degree != target.weight()) return 0;
  SchurExpansion expansion = expand_product(lambdas, bound);
  auto it = expansion.find(target);
  return it == expansion.end() ? Integer(0) : it->second;
}

namespace detail {

inline std::pair<int, int> common_shape(std::span<const SchubertIndex> seq) {
  if (seq.empty()) throw std::invalid_argument("empty index sequence");
  int n = seq.front().ambient();
  int t = seq.front().cardinality();
  for (const auto& index : seq)
    if (index.ambient() != n || index.cardinality() != t)
      throw std::invalid_argument("index sequence mixes ambient or cardinality");
  return {n, t};
}

}  // namespace detail

/// True iff the Schubert product of the sequence equals the point class
/// on Gr(t, C^n): total degree t(n-t) and coefficient one on the rectangle.
inline bool is_point_class(std::span<const SchubertIndex> seq) {
  auto [n, t] = detail::common_shape(seq);
  RectangleBound bound{t, n - t};
  std::vector<Partition> lambdas;
  lambdas.reserve(seq.size());
  int degree = 0;
  for (const auto& index : seq) {
    lambdas.push_back(partition_of_index(index));
    degree += lambdas.back().weight();
  }
  if (degree != t * (n - t)) return false;
  return product_coefficient(lambdas, bound, Partition::rectangle(t, n - t)) == 1;
}

/// True iff the Schubert product of the sequence is nonzero on Gr(t, C^n).
inline bool is_nonzero_product(std::span<const SchubertIndex> seq) {
  auto [n, t] = detail::common_shape(seq);
  RectangleBound bound{t, n - t};
  std::vector<Partition> lambdas;
  lambdas.reserve(seq.size());
  int degree = 0;
  for (const auto& index : seq) {
    lambdas.push_back(partition_of_index(index));
    degree += lambdas.back().weight();
  }
  if (degree > t * (n - t)) return false;
  return !expand_product(lambdas, bound).empty();
}

}  // namespace horn
