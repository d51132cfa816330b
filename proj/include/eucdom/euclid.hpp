#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eucdom/axes.hpp"
#include "eucdom/error.hpp"
#include "eucdom/exactlp.hpp"
#include "eucdom/profile.hpp"
#include "eucdom/rational.hpp"

namespace eucdom {

/// Points on the line for alternatives (E) and voters (F).
///
/// Voter ids live in the embedding's own frame of `num_voters` voters. When
/// `deleted_voter` is set to s, the embedding is meant for the profile with
/// voter s removed: profile voter j maps to frame voter j for j < s and to
/// j + 1 otherwise.
class Embedding {
 public:
  Embedding(int num_alternatives, int num_voters, std::optional<VoterId> deleted_voter = std::nullopt)
      : alt_(static_cast<std::size_t>(num_alternatives) + 1),
        voter_(static_cast<std::size_t>(num_voters) + 1),
        deleted_(deleted_voter) {
    if (num_alternatives < 1 || num_voters < 1)
      throw std::invalid_argument("embedding needs at least one alternative and one voter");
    if (deleted_ && (*deleted_ < 1 || *deleted_ > num_voters))
      throw std::out_of_range("deleted voter " + std::to_string(*deleted_) + " outside 1.." +
                              std::to_string(num_voters));
  }

  int num_alternatives() const noexcept { return static_cast<int>(alt_.size()) - 1; }
  int num_voters() const noexcept { return static_cast<int>(voter_.size()) - 1; }
  std::optional<VoterId> deleted_voter() const noexcept { return deleted_; }

  void set_alternative(AlternativeId a, Rational x) { alt_.at(check_alt(a)) = std::move(x); }
  void set_voter(VoterId v, Rational x) { voter_.at(check_voter(v)) = std::move(x); }

  bool has_alternative(AlternativeId a) const { return alt_.at(check_alt(a)).has_value(); }
  bool has_voter(VoterId v) const { return voter_.at(check_voter(v)).has_value(); }

  const Rational& alternative(AlternativeId a) const {
    const auto& x = alt_.at(check_alt(a));
    if (!x) throw std::invalid_argument("alternative " + std::to_string(a) + " has no position");
    return *x;
  }
  const Rational& voter(VoterId v) const {
    const auto& x = voter_.at(check_voter(v));
    if (!x) throw std::invalid_argument("voter " + std::to_string(v) + " has no position");
    return *x;
  }

  /// Frame voter id that profile voter `v` corresponds to.
  VoterId frame_voter(VoterId v) const { return deleted_ && v >= *deleted_ ? v + 1 : v; }

  /// Every alternative placed, and no two at the same point.
  void validate_alternatives() const {
    std::vector<std::pair<Rational, AlternativeId>> placed;
    for (AlternativeId a = 1; a <= num_alternatives(); ++a) placed.emplace_back(alternative(a), a);
    std::sort(placed.begin(), placed.end());
    for (std::size_t i = 1; i < placed.size(); ++i)
      if (placed[i].first == placed[i - 1].first)
        throw std::invalid_argument("alternatives " + std::to_string(placed[i - 1].second) + " and " +
                                    std::to_string(placed[i].second) + " share a position");
  }

  friend bool operator==(const Embedding& a, const Embedding& b) {
    return a.alt_ == b.alt_ && a.voter_ == b.voter_ && a.deleted_ == b.deleted_;
  }

 private:
  std::size_t check_alt(AlternativeId a) const {
    if (a < 1 || a > num_alternatives())
      throw std::out_of_range("alternative " + std::to_string(a) + " outside 1.." +
                              std::to_string(num_alternatives()));
    return static_cast<std::size_t>(a);
  }
  std::size_t check_voter(VoterId v) const {
    if (v < 1 || v > num_voters())
      throw std::out_of_range("voter " + std::to_string(v) + " outside 1.." + std::to_string(num_voters()));
    return static_cast<std::size_t>(v);
  }

  std::vector<std::optional<Rational>> alt_;
  std::vector<std::optional<Rational>> voter_;
  std::optional<VoterId> deleted_;
};

// ---------------------------------------------------------------------------
// Embedding file format:
//   EMBED <m> <n> [s=<id>]
//   A <id> <p>[/<q>]      one per alternative
//   V <id> <p>[/<q>]      one per placed voter

inline std::string serialize_embedding(const Embedding& e) {
  std::string out = "EMBED " + std::to_string(e.num_alternatives()) + " " + std::to_string(e.num_voters());
  if (e.deleted_voter()) out += " s=" + std::to_string(*e.deleted_voter());
  out += "\n";
  for (AlternativeId a = 1; a <= e.num_alternatives(); ++a)
    if (e.has_alternative(a)) out += "A " + std::to_string(a) + " " + format_rational(e.alternative(a)) + "\n";
  for (VoterId v = 1; v <= e.num_voters(); ++v)
    if (e.has_voter(v)) out += "V " + std::to_string(v) + " " + format_rational(e.voter(v)) + "\n";
  return out;
}

inline Embedding parse_embedding(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw ParseError(1, "missing header \"EMBED <m> <n> [s=<id>]\"");

  const auto header = detail::split_ws(lines[0].text);
  long long m = 0, n = 0, s = 0;
  const bool header_ok = (header.size() == 3 || header.size() == 4) && header[0] == "EMBED" &&
                         detail::parse_int(header[1], m) && detail::parse_int(header[2], n) &&
                         (header.size() == 3 ||
                          (header[3].substr(0, 2) == "s=" && detail::parse_int(header[3].substr(2), s)));
  if (!header_ok) throw ParseError(lines[0].number, "malformed header, expected \"EMBED <m> <n> [s=<id>]\"");
  if (m < 1 || n < 1 || m > 1'000'000 || n > 1'000'000)
    throw ParseError(lines[0].number, "header needs 1 <= m, n <= 1000000");
  if (header.size() == 4 && (s < 1 || s > n))
    throw ParseError(lines[0].number, "deleted voter " + std::to_string(s) + " outside 1.." + std::to_string(n));

  Embedding e(static_cast<int>(m), static_cast<int>(n),
              header.size() == 4 ? std::optional<VoterId>(static_cast<VoterId>(s)) : std::nullopt);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto tokens = detail::split_ws(lines[i].text);
    const std::size_t at = lines[i].number;
    if (tokens.size() != 3 || (tokens[0] != "A" && tokens[0] != "V"))
      throw ParseError(at, "expected \"A <id> <p>/<q>\" or \"V <id> <p>/<q>\"");
    long long id = 0;
    if (!detail::parse_int(tokens[1], id)) throw ParseError(at, "bad id '" + std::string(tokens[1]) + "'");
    Rational x;
    try {
      x = parse_rational(tokens[2]);
    } catch (const std::invalid_argument& err) {
      throw ParseError(at, err.what());
    }
    const bool is_alt = tokens[0] == "A";
    const long long limit = is_alt ? m : n;
    if (id < 1 || id > limit)
      throw ParseError(at, std::string(is_alt ? "alternative " : "voter ") + std::to_string(id) +
                               " outside 1.." + std::to_string(limit));
    const int key = static_cast<int>(id);
    if (is_alt ? e.has_alternative(key) : e.has_voter(key))
      throw ParseError(at, std::string(is_alt ? "alternative " : "voter ") + std::to_string(id) +
                               " placed twice");
    if (is_alt)
      e.set_alternative(key, std::move(x));
    else
      e.set_voter(key, std::move(x));
  }
  for (AlternativeId a = 1; a <= m; ++a)
    if (!e.has_alternative(a)) throw ParseError(lines.back().number, "alternative " + std::to_string(a) + " has no position");
  try {
    e.validate_alternatives();
  } catch (const std::invalid_argument& err) {
    throw ParseError(lines.back().number, err.what());
  }
  return e;
}

inline Embedding parse_embedding(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_embedding(in);
}

// ---------------------------------------------------------------------------

enum class ConstraintMode {
  Full,     // every pair of alternatives for every voter
  Reduced,  // only pairs adjacent in the voter's ranking; equivalent by transitivity
};

/// Variable index of E[a] and F[v] in systems built by build_constraints.
inline int alt_var(AlternativeId a) { return a - 1; }
inline int voter_var(const Profile& p, VoterId v) { return p.num_alternatives() + v - 1; }

/// Strict system over (E[1..m], F[1..n]) whose solutions are exactly the
/// embeddings of `p` that order the alternatives along `ax`:
///   E[ax(t)] - E[ax(t+1)] < 0 for consecutive axis slots, and for a voter i
///   and alternatives a left of b on the axis, 2F[i] - E[a] - E[b] < 0 when
///   i prefers a, its negation when i prefers b.
inline HomogeneousSystem build_constraints(const Profile& p, const Axis& ax, ConstraintMode mode) {
  const int m = p.num_alternatives(), n = p.num_voters();
  if (ax.size() != m)
    throw DimensionError("axis has " + std::to_string(ax.size()) + " alternatives, profile has " +
                         std::to_string(m));
  HomogeneousSystem sys(m + n);
  for (int t = 0; t + 1 < m; ++t) {
    RationalVector row(static_cast<std::size_t>(m + n));
    row[alt_var(ax[t])] = 1;
    row[alt_var(ax[t + 1])] = -1;
    sys.add_row(std::move(row), "axis " + std::to_string(ax[t]) + "<" + std::to_string(ax[t + 1]));
  }
  auto add_preference = [&](VoterId v, AlternativeId better, AlternativeId worse) {
    const bool better_is_left = ax.position(better) < ax.position(worse);
    const int sign = better_is_left ? 1 : -1;
    RationalVector row(static_cast<std::size_t>(m + n));
    row[voter_var(p, v)] = 2 * sign;
    row[alt_var(better)] = -sign;
    row[alt_var(worse)] = -sign;
    sys.add_row(std::move(row),
                "v" + std::to_string(v) + " " + std::to_string(better) + ">" + std::to_string(worse));
  };
  for (VoterId v = 1; v <= n; ++v) {
    const auto& ranking = p.ranking(v);
    if (mode == ConstraintMode::Full) {
      for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) add_preference(v, ranking[x], ranking[y]);
    } else {
      for (int x = 0; x + 1 < m; ++x) add_preference(v, ranking[x], ranking[x + 1]);
    }
  }
  return sys;
}

/// Voter `voter` would order `preferred` above `other`, but the embedding puts
/// it at least as far away.
struct Violation {
  VoterId voter;        // profile numbering
  VoterId frame_voter;  // embedding numbering
  AlternativeId preferred;
  AlternativeId other;
};

struct VerificationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks the embedding against every voter of `p`. `p` must already have the
/// embedding's deleted voter removed.
inline VerificationReport verify_embedding(const Profile& p, const Embedding& e,
                                           ConstraintMode mode = ConstraintMode::Full) {
  const int m = p.num_alternatives();
  if (e.num_alternatives() != m)
    throw DimensionError("embedding has " + std::to_string(e.num_alternatives()) +
                         " alternatives, profile has " + std::to_string(m));
  const int expected_voters = e.num_voters() - (e.deleted_voter() ? 1 : 0);
  if (e.deleted_voter() && p.num_voters() == e.num_voters())
    throw std::invalid_argument("voter " + std::to_string(*e.deleted_voter()) +
                                " is excluded by the embedding but still present in the profile");
  if (p.num_voters() != expected_voters)
    throw DimensionError("profile has " + std::to_string(p.num_voters()) + " voters, embedding represents " +
                         std::to_string(expected_voters));
  e.validate_alternatives();

  VerificationReport report;
  for (VoterId v = 1; v <= p.num_voters(); ++v) {
    const VoterId fv = e.frame_voter(v);
    const Rational& f = e.voter(fv);
    const auto& ranking = p.ranking(v);
    std::vector<Rational> dist(static_cast<std::size_t>(m));
    for (int t = 0; t < m; ++t) dist[t] = abs(f - e.alternative(ranking[t]));
    for (int x = 0; x < m; ++x) {
      const int last = mode == ConstraintMode::Full ? m : std::min(m, x + 2);
      for (int y = x + 1; y < last; ++y)
        if (dist[x] >= dist[y]) report.violations.push_back({v, fv, ranking[x], ranking[y]});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

/// Two alternatives at exactly the same distance from a voter.
class DistanceTie : public std::runtime_error {
 public:
  DistanceTie(AlternativeId a, AlternativeId b)
      : std::runtime_error("alternatives " + std::to_string(a) + " and " + std::to_string(b) +
                           " are equally far from the voter"),
        a_(a),
        b_(b) {}
  AlternativeId first() const noexcept { return a_; }
  AlternativeId second() const noexcept { return b_; }

 private:
  AlternativeId a_, b_;
};

/// Alternatives by increasing distance from frame voter `voter`.
inline Ranking induced_ranking(const Embedding& e, VoterId voter) {
  const Rational& f = e.voter(voter);
  std::vector<std::pair<Rational, AlternativeId>> by_distance;
  for (AlternativeId a = 1; a <= e.num_alternatives(); ++a) by_distance.emplace_back(abs(f - e.alternative(a)), a);
  std::sort(by_distance.begin(), by_distance.end());
  for (std::size_t i = 1; i < by_distance.size(); ++i)
    if (by_distance[i].first == by_distance[i - 1].first)
      throw DistanceTie(by_distance[i - 1].second, by_distance[i].second);
  std::vector<int> order;
  for (const auto& [d, a] : by_distance) order.push_back(a);
  return Ranking(std::move(order));
}

// ---------------------------------------------------------------------------

/// Why one candidate axis admits no embedding.
struct AxisCertificate {
  Axis axis;
  HomogeneousSystem system;
  RationalVector certificate;
};

enum class EuclideanStatus { Euclidean, NotEuclidean, Unknown };

struct EuclideanResult {
  EuclideanStatus status = EuclideanStatus::Unknown;
  std::optional<Axis> axis;            // set when Euclidean
  std::optional<Embedding> embedding;  // set when Euclidean
  std::vector<AxisCertificate> certificates;
  int axes_tried = 0;
  bool truncated = false;  // axis enumeration hit the cap
};

/// Searches the single-peaked axes of `p` in lexicographic order and solves
/// the reduced constraint system on each. Every Euclidean placement orders the
/// alternatives along a single-peaked axis, so the search is complete unless
/// the axis cap cuts it short, in which case the answer is Unknown.
inline EuclideanResult recognize_euclidean(const Profile& p, int axis_cap = kDefaultAxisCap) {
  const int m = p.num_alternatives(), n = p.num_voters();
  const auto axes = enumerate_axes(p, axis_cap);
  EuclideanResult result;
  result.truncated = axes.truncated;
  for (const auto& ax : axes.axes) {
    ++result.axes_tried;
    auto sys = build_constraints(p, ax, ConstraintMode::Reduced);
    // a single alternative yields no constraints at all
    auto outcome = sys.num_rows() == 0
                       ? Feasibility(Feasible{RationalVector(static_cast<std::size_t>(m + n), Rational(0))})
                       : feasible_strict(sys);
    if (auto* feasible = std::get_if<Feasible>(&outcome)) {
      Embedding e(m, n);
      for (AlternativeId a = 1; a <= m; ++a) e.set_alternative(a, feasible->witness[alt_var(a)]);
      for (VoterId v = 1; v <= n; ++v) e.set_voter(v, feasible->witness[voter_var(p, v)]);
      result.status = EuclideanStatus::Euclidean;
      result.axis = ax;
      result.embedding = std::move(e);
      return result;
    }
    result.certificates.push_back({ax, std::move(sys), std::move(std::get<Infeasible>(outcome).certificate)});
  }
  result.status = axes.truncated ? EuclideanStatus::Unknown : EuclideanStatus::NotEuclidean;
  return result;
}

}  // namespace eucdom
