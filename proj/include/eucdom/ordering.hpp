#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eucdom {

using AlternativeId = int;  // 1-based
using VoterId = int;        // 1-based

/// A permutation of the ids 1..size. The tag keeps rankings, axes and voter
/// orders from being mixed up; they share the representation and nothing else.
template <class Tag>
class Ordering {
 public:
  Ordering() = default;

  explicit Ordering(std::vector<int> order) : order_(std::move(order)) {
    const int size = static_cast<int>(order_.size());
    position_.assign(order_.size() + 1, -1);
    for (int at = 0; at < size; ++at) {
      const int id = order_[at];
      if (id < 1 || id > size)
        throw std::invalid_argument("id " + std::to_string(id) + " outside 1.." +
                                    std::to_string(size));
      if (position_[id] != -1)
        throw std::invalid_argument("duplicate id " + std::to_string(id));
      position_[id] = at;
    }
  }

  /// 1, 2, ..., size.
  static Ordering identity(int size) {
    std::vector<int> order(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) order[i] = i + 1;
    return Ordering(std::move(order));
  }

  int size() const noexcept { return static_cast<int>(order_.size()); }
  int operator[](int at) const { return order_[at]; }
  std::span<const int> ids() const noexcept { return order_; }

  /// 0-based slot of `id`.
  int position(int id) const { return position_.at(id); }

  Ordering reversed() const { return Ordering(std::vector<int>(order_.rbegin(), order_.rend())); }

  /// Lexicographically no larger than its mirror image.
  bool is_canonical() const {
    return std::lexicographical_compare_three_way(order_.begin(), order_.end(), order_.rbegin(),
                                                  order_.rend()) <= 0;
  }

  Ordering canonical() const { return is_canonical() ? *this : reversed(); }

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.order_ == b.order_; }
  friend auto operator<=>(const Ordering& a, const Ordering& b) { return a.order_ <=> b.order_; }

 private:
  std::vector<int> order_;
  std::vector<int> position_;
};

struct RankingTag {};
struct AxisTag {};
struct VoterOrderTag {};

/// Alternatives, most preferred first.
using Ranking = Ordering<RankingTag>;
/// Alternatives, left to right.
using Axis = Ordering<AxisTag>;
/// Voters, first to last.
using VoterOrder = Ordering<VoterOrderTag>;

template <class Tag>
std::string join_ids(const Ordering<Tag>& ordering, const std::string& prefix = "") {
  std::string out;
  for (int at = 0; at < ordering.size(); ++at) {
    if (at) out += ' ';
    out += prefix + std::to_string(ordering[at]);
  }
  return out;
}

}  // namespace eucdom
