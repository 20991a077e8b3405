#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace horn {

/// Rectangle of t rows by n-t columns; Schubert classes on Gr(t, C^n) are
/// indexed by the partitions fitting inside it.
struct RectangleBound {
  int rows = 0;
  int cols = 0;
};

/// Integer partition in canonical form: weakly decreasing positive parts,
/// no trailing zeros.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("partition part < 0");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition rectangle(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative rectangle");
    if (cols == 0) return Partition{};
    return Partition(std::vector<int>(static_cast<size_t>(rows), cols));
  }

  int length() const { return static_cast<int>(parts_.size()); }

  /// Number of boxes |lambda|.
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Part at 0-based row index; zero beyond the last part.
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
  }

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  bool fits(const RectangleBound& bound) const {
    return length() <= bound.rows && part(0) <= bound.cols;
  }

  bool contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
      if (mu.part(i) > part(i)) return false;
    return true;
  }

  /// Transpose of the Young diagram.
  Partition conjugate() const {
    if (parts_.empty()) return Partition{};
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
    return Partition(std::move(conj));
  }

  /// 180-degree rotated complement inside the rectangle.
  Partition complement_in(const RectangleBound& bound) const {
    if (!fits(bound)) throw std::invalid_argument("partition does not fit rectangle");
    std::vector<int> comp(static_cast<size_t>(bound.rows));
    for (int i = 0; i < bound.rows; ++i)
      comp[static_cast<size_t>(i)] = bound.cols - part(bound.rows - 1 - i);
    return Partition(std::move(comp));
  }

  std::string to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Parses "(2,1)", "2,1", or "()" / "" for the empty partition.
inline Partition parse_partition(std::string_view text) {
  std::string body(text);
  if (!body.empty() && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < body.size()) {
    size_t comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    std::string token = body.substr(pos, comma - pos);
    if (!token.empty()) {
      size_t used = 0;
      int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument("bad partition: " + std::string(text));
      parts.push_back(value);
    }
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace horn
