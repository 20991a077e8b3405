#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "horn/partition.hpp"

namespace horn {

/// A cardinality-t subset {a_1 < ... < a_t} of [n], indexing the Schubert
/// class of the partition (a_t - t, ..., a_1 - 1) on Gr(t, C^n).
class SchubertIndex {
 public:
  SchubertIndex(int ambient_n, std::vector<int> elements)
      : ambient_n_(ambient_n), elements_(std::move(elements)) {
    if (ambient_n_ < 1) throw std::invalid_argument("ambient must be positive");
    if (elements_.empty()) throw std::invalid_argument("index set must be nonempty");
    for (size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i] < 1 || elements_[i] > ambient_n_)
        throw std::invalid_argument("index element out of range");
      if (i + 1 < elements_.size() && elements_[i] >= elements_[i + 1])
        throw std::invalid_argument("index elements must be strictly increasing");
    }
  }

  SchubertIndex(int ambient_n, std::initializer_list<int> elements)
      : SchubertIndex(ambient_n, std::vector<int>(elements)) {}

  /// {1, ..., t}: the unit class.
  static SchubertIndex unit(int t, int n) {
    std::vector<int> e(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) e[static_cast<size_t>(i)] = i + 1;
    return SchubertIndex(n, std::move(e));
  }

  /// {n-t+1, ..., n}: the point class.
  static SchubertIndex point(int t, int n) {
    std::vector<int> e(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) e[static_cast<size_t>(i)] = n - t + 1 + i;
    return SchubertIndex(n, std::move(e));
  }

  int ambient() const { return ambient_n_; }
  int cardinality() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const { return elements_; }
  bool contains(int i) const {
    return std::binary_search(elements_.begin(), elements_.end(), i);
  }

  std::string to_string() const {
    std::string out = "{";
    for (size_t i = 0; i < elements_.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(elements_[i]);
    }
    return out + "}";
  }

  friend auto operator<=>(const SchubertIndex&, const SchubertIndex&) = default;

 private:
  int ambient_n_;
  std::vector<int> elements_;
};

/// lambda(I) = (a_t - t, ..., a_2 - 2, a_1 - 1); fits in t x (n-t).
inline Partition partition_of_index(const SchubertIndex& index) {
  const auto& a = index.elements();
  int t = index.cardinality();
  std::vector<int> parts(static_cast<size_t>(t));
  for (int j = 0; j < t; ++j)
    parts[static_cast<size_t>(j)] = a[static_cast<size_t>(t - 1 - j)] - (t - j);
  return Partition(std::move(parts));
}

/// Inverse of partition_of_index for partitions fitting in t x (n-t).
inline SchubertIndex index_of_partition(const Partition& lambda, int t, int n) {
  if (!lambda.fits(RectangleBound{t, n - t}))
    throw std::invalid_argument("partition does not fit in t x (n-t)");
  std::vector<int> e(static_cast<size_t>(t));
  for (int i = 1; i <= t; ++i)
    e[static_cast<size_t>(i - 1)] = lambda.part(t - i) + i;
  return SchubertIndex(n, std::move(e));
}

/// J = {n+1-i | i not in I}; satisfies lambda(J) = conjugate(lambda(I)).
inline SchubertIndex complement_index(const SchubertIndex& index) {
  int n = index.ambient();
  if (index.cardinality() == n)
    throw std::invalid_argument("complement of a full index set is empty");
  std::vector<int> e;
  e.reserve(static_cast<size_t>(n - index.cardinality()));
  for (int i = n; i >= 1; --i)
    if (!index.contains(i)) e.push_back(n + 1 - i);
  return SchubertIndex(n, std::move(e));
}

/// J = {n+1-i | i in I}; an involution of the same cardinality.
inline SchubertIndex dual_index(const SchubertIndex& index) {
  int n = index.ambient();
  std::vector<int> e;
  e.reserve(static_cast<size_t>(index.cardinality()));
  for (auto it = index.elements().rbegin(); it != index.elements().rend(); ++it)
    e.push_back(n + 1 - *it);
  return SchubertIndex(n, std::move(e));
}

}  // namespace horn
