#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace hcrank {

struct Cell {
  int row = 1;  // 1-based
  int col = 1;
  auto operator<=>(const Cell&) const = default;
};

// Weakly decreasing positive parts, stored densely.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[static_cast<size_t>(i)] : 0; }

  std::vector<Cell> cells() const;
  Partition doubled() const;  // 2λ: every part doubled
  Partition transpose() const;
  // multiplicity m_i of part i
  int multiplicity(int i) const;

  std::string to_string() const;  // "4+3+1+1", "" for the empty partition
  static Partition parse(std::string_view text);

  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

}  // namespace hcrank
