#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eucdom/error.hpp"
#include "eucdom/ordering.hpp"

namespace eucdom {

/// n strict rankings over the alternatives 1..m. Immutable once built.
class Profile {
 public:
  Profile(int num_alternatives, std::vector<Ranking> rankings)
      : m_(num_alternatives), rankings_(std::move(rankings)) {
    if (m_ < 1) throw std::invalid_argument("profile needs at least one alternative");
    if (rankings_.empty()) throw std::invalid_argument("profile needs at least one voter");
    for (std::size_t v = 0; v < rankings_.size(); ++v)
      if (rankings_[v].size() != m_)
        throw std::invalid_argument("voter " + std::to_string(v + 1) + " ranks " +
                                    std::to_string(rankings_[v].size()) + " alternatives, expected " +
                                    std::to_string(m_));
  }

  /// Convenience for literal tables: rows of alternative ids, best first.
  static Profile from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw std::invalid_argument("profile needs at least one voter");
    std::vector<Ranking> rankings;
    rankings.reserve(rows.size());
    for (const auto& row : rows) rankings.emplace_back(row);
    return Profile(static_cast<int>(rows.front().size()), std::move(rankings));
  }

  int num_alternatives() const noexcept { return m_; }
  int num_voters() const noexcept { return static_cast<int>(rankings_.size()); }

  const Ranking& ranking(VoterId v) const { return rankings_.at(static_cast<std::size_t>(v - 1)); }
  const std::vector<Ranking>& rankings() const noexcept { return rankings_; }

  /// 0 = top choice of voter v.
  int rank(VoterId v, AlternativeId a) const { return ranking(v).position(a); }
  bool prefers(VoterId v, AlternativeId a, AlternativeId b) const { return rank(v, a) < rank(v, b); }

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.m_ == b.m_ && a.rankings_ == b.rankings_;
  }

 private:
  int m_;
  std::vector<Ranking> rankings_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t at = 0;
  while (at < line.size()) {
    while (at < line.size() && (line[at] == ' ' || line[at] == '\t' || line[at] == '\r')) ++at;
    const std::size_t start = at;
    while (at < line.size() && line[at] != ' ' && line[at] != '\t' && line[at] != '\r') ++at;
    if (at > start) tokens.push_back(line.substr(start, at - start));
  }
  return tokens;
}

inline bool parse_int(std::string_view token, long long& out) {
  if (token.empty() || token.size() > 18) return false;
  long long value = 0;
  std::size_t at = 0;
  bool negative = false;
  if (token[0] == '-') {
    negative = true;
    at = 1;
    if (token.size() == 1) return false;
  }
  for (; at < token.size(); ++at) {
    if (token[at] < '0' || token[at] > '9') return false;
    value = value * 10 + (token[at] - '0');
  }
  out = negative ? -value : value;
  return true;
}

/// Lines that carry content, with their 1-based line numbers. '#' lines and
/// blank lines are dropped.
struct NumberedLine {
  std::size_t number;
  std::string text;
};

inline std::vector<NumberedLine> content_lines(std::istream& in) {
  std::vector<NumberedLine> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back({number, line});
  }
  return lines;
}

}  // namespace detail

/// Reads the "<m> <n>" header followed by n rankings, best first.
inline Profile parse_profile(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw ParseError(1, "missing header \"<m> <n>\"");

  const auto header = detail::split_ws(lines[0].text);
  long long m = 0, n = 0;
  if (header.size() != 2 || !detail::parse_int(header[0], m) || !detail::parse_int(header[1], n))
    throw ParseError(lines[0].number, "malformed header, expected \"<m> <n>\"");
  if (m < 1 || n < 1) throw ParseError(lines[0].number, "header needs m >= 1 and n >= 1");
  if (m > 1'000'000 || n > 1'000'000) throw ParseError(lines[0].number, "header values too large");

  const std::size_t rows = lines.size() - 1;
  if (rows < static_cast<std::size_t>(n)) {
    const std::size_t at = lines.back().number;
    throw ParseError(at, "expected " + std::to_string(n) + " rankings, found " + std::to_string(rows));
  }
  if (rows > static_cast<std::size_t>(n))
    throw ParseError(lines[static_cast<std::size_t>(n) + 1].number,
                     "more than the " + std::to_string(n) + " rankings announced in the header");

  std::vector<Ranking> rankings;
  rankings.reserve(static_cast<std::size_t>(n));
  for (std::size_t v = 1; v <= static_cast<std::size_t>(n); ++v) {
    const auto& line = lines[v];
    const auto tokens = detail::split_ws(line.text);
    if (tokens.size() != static_cast<std::size_t>(m))
      throw ParseError(line.number, "expected " + std::to_string(m) + " alternatives, found " +
                                        std::to_string(tokens.size()));
    std::vector<int> order;
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (const auto token : tokens) {
      long long id = 0;
      if (!detail::parse_int(token, id))
        throw ParseError(line.number, "not an alternative id: '" + std::string(token) + "'");
      if (id < 1 || id > m)
        throw ParseError(line.number, "alternative " + std::to_string(id) + " outside 1.." +
                                          std::to_string(m));
      if (seen[id]) throw ParseError(line.number, "duplicate alternative " + std::to_string(id));
      seen[id] = true;
      order.push_back(static_cast<int>(id));
    }
    rankings.emplace_back(std::move(order));
  }
  return Profile(static_cast<int>(m), std::move(rankings));
}

inline Profile parse_profile(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_profile(in);
}

inline std::string serialize_profile(const Profile& p) {
  std::string out = std::to_string(p.num_alternatives()) + " " + std::to_string(p.num_voters()) + "\n";
  for (const auto& ranking : p.rankings()) out += join_ids(ranking) + "\n";
  return out;
}

/// Drops voter v; later voters move up one id, alternatives are untouched.
inline Profile delete_voter(const Profile& p, VoterId v) {
  if (v < 1 || v > p.num_voters())
    throw std::out_of_range("voter " + std::to_string(v) + " outside 1.." +
                            std::to_string(p.num_voters()));
  if (p.num_voters() == 1) throw std::invalid_argument("cannot delete the only voter");
  std::vector<Ranking> rest;
  rest.reserve(static_cast<std::size_t>(p.num_voters() - 1));
  for (VoterId u = 1; u <= p.num_voters(); ++u)
    if (u != v) rest.push_back(p.ranking(u));
  return Profile(p.num_alternatives(), std::move(rest));
}

}  // namespace eucdom
