#include "hcrank/partition.hpp"

#include <algorithm>
#include <charconv>

#include "hcrank/errors.hpp"

namespace hcrank {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<size_t>(n_));
  for (int r = 0; r < length(); ++r)
    for (int c = 0; c < parts_[static_cast<size_t>(r)]; ++c) out.push_back({r + 1, c + 1});
  return out;
}

Partition Partition::doubled() const {
  std::vector<int> p = parts_;
  for (auto& x : p) x *= 2;
  return Partition(std::move(p));
}

Partition Partition::transpose() const {
  std::vector<int> t;
  int cols = parts_.empty() ? 0 : parts_.front();
  for (int c = 1; c <= cols; ++c) {
    int h = 0;
    while (h < length() && parts_[static_cast<size_t>(h)] >= c) ++h;
    t.push_back(h);
  }
  return Partition(std::move(t));
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find('+', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = text.substr(pos, next - pos);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError("bad partition: " + std::string(text));
    parts.push_back(v);
    pos = next + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace hcrank
