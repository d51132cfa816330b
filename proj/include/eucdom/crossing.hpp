#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "eucdom/error.hpp"
#include "eucdom/profile.hpp"

namespace eucdom {

/// True iff along `vo` the relative order of every pair of alternatives flips
/// at most once.
inline bool is_single_crossing_on(const Profile& p, const VoterOrder& vo) {
  const int m = p.num_alternatives(), n = p.num_voters();
  if (vo.size() != n)
    throw DimensionError("voter order has " + std::to_string(vo.size()) + " voters, profile has " +
                         std::to_string(n));
  for (AlternativeId a = 1; a <= m; ++a)
    for (AlternativeId b = a + 1; b <= m; ++b) {
      int flips = 0;
      bool previous = p.prefers(vo[0], a, b);
      for (int at = 1; at < n; ++at) {
        const bool current = p.prefers(vo[at], a, b);
        if (current != previous && ++flips > 1) return false;
        previous = current;
      }
    }
  return true;
}

/// Number of alternative pairs the two voters order differently.
inline int kendall_distance(const Profile& p, VoterId u, VoterId v) {
  const int m = p.num_alternatives();
  int d = 0;
  for (AlternativeId a = 1; a <= m; ++a)
    for (AlternativeId b = a + 1; b <= m; ++b) d += p.prefers(u, a, b) != p.prefers(v, a, b);
  return d;
}

/// A canonical single-crossing voter order, or nothing. Tries each voter as
/// the first one and sorts the rest by Kendall distance from it (ties by id):
/// along any single-crossing order the disagreement sets with the first voter
/// are nested, so that sort recovers one whenever one exists.
inline std::optional<VoterOrder> find_sc_order(const Profile& p) {
  const int n = p.num_voters();
  if (n <= 2) return VoterOrder::identity(n);
  for (VoterId first = 1; first <= n; ++first) {
    std::vector<std::pair<int, VoterId>> rest;
    for (VoterId v = 1; v <= n; ++v)
      if (v != first) rest.emplace_back(kendall_distance(p, first, v), v);
    std::sort(rest.begin(), rest.end());
    std::vector<int> order{first};
    for (const auto& [distance, v] : rest) order.push_back(v);
    VoterOrder vo(std::move(order));
    if (is_single_crossing_on(p, vo)) return vo.canonical();
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Forbidden substructures for single-crossingness.

enum class SCWitnessKind {
  Gamma3x6,  // 3 voters, 3 pairs; on pair j voter j disagrees with the other two
  Delta4x4,  // 4 voters, 2 pairs; all four orientation combinations occur
};

/// Ordered pair (x, y), x != y.
using AlternativePair = std::pair<AlternativeId, AlternativeId>;

/// Pairs are stated in the orientation of the literal pattern:
///  Gamma3x6 with pairs (a,b),(c,d),(e,f):
///    v1: b>a, c>d, e>f;  v2: a>b, d>c, e>f;  v3: a>b, c>d, f>e.
///  Delta4x4 with pairs (a,b),(c,d):
///    v1: a>b, c>d;  v2: a>b, d>c;  v3: b>a, c>d;  v4: b>a, d>c.
struct SCWitness {
  SCWitnessKind kind;
  std::vector<VoterId> voters;
  std::vector<AlternativePair> pairs;
};

inline bool witness_holds(const Profile& p, const SCWitness& w) {
  for (const auto& [x, y] : w.pairs)
    if (x == y || x < 1 || y < 1 || x > p.num_alternatives() || y > p.num_alternatives())
      return false;
  for (VoterId v : w.voters)
    if (v < 1 || v > p.num_voters()) return false;
  auto pref = [&](VoterId v, const AlternativePair& pr, bool forward) {
    return forward ? p.prefers(v, pr.first, pr.second) : p.prefers(v, pr.second, pr.first);
  };
  if (w.kind == SCWitnessKind::Gamma3x6) {
    if (w.voters.size() != 3 || w.pairs.size() != 3) return false;
    for (int voter = 0; voter < 3; ++voter)
      for (int pair = 0; pair < 3; ++pair) {
        // voter j is the odd one out on pair j and prefers its second element
        const bool odd = voter == pair;
        if (!pref(w.voters[voter], w.pairs[pair], !odd)) return false;
      }
    return true;
  }
  if (w.voters.size() != 4 || w.pairs.size() != 2) return false;
  static constexpr std::array<std::array<bool, 2>, 4> kPattern{
      {{true, true}, {true, false}, {false, true}, {false, false}}};
  for (int voter = 0; voter < 4; ++voter)
    for (int pair = 0; pair < 2; ++pair)
      if (!pref(w.voters[voter], w.pairs[pair], kPattern[voter][pair])) return false;
  return true;
}

/// One of the two forbidden patterns, or nothing iff `p` is single-crossing.
/// Gamma3x6 is searched first (voter triples in lexicographic order), then
/// Delta4x4 (pairs of alternative pairs in lexicographic order).
inline std::optional<SCWitness> find_sc_obstruction(const Profile& p) {
  const int m = p.num_alternatives(), n = p.num_voters();
  std::vector<AlternativePair> pairs;
  for (AlternativeId a = 1; a <= m; ++a)
    for (AlternativeId b = a + 1; b <= m; ++b) pairs.emplace_back(a, b);

  // Pair oriented so that `odd` prefers its second element while `u` and `w`
  // prefer its first.
  auto isolating_pair = [&](VoterId odd, VoterId u, VoterId w) -> std::optional<AlternativePair> {
    for (const auto& [a, b] : pairs) {
      const bool odd_ab = p.prefers(odd, a, b);
      if (p.prefers(u, a, b) != odd_ab && p.prefers(w, a, b) != odd_ab)
        return odd_ab ? AlternativePair{b, a} : AlternativePair{a, b};
    }
    return std::nullopt;
  };

  for (VoterId v1 = 1; v1 <= n; ++v1)
    for (VoterId v2 = v1 + 1; v2 <= n; ++v2)
      for (VoterId v3 = v2 + 1; v3 <= n; ++v3) {
        const auto ab = isolating_pair(v1, v2, v3);
        if (!ab) continue;
        const auto cd = isolating_pair(v2, v1, v3);
        if (!cd) continue;
        const auto ef = isolating_pair(v3, v1, v2);
        if (!ef) continue;
        return SCWitness{SCWitnessKind::Gamma3x6, {v1, v2, v3}, {*ab, *cd, *ef}};
      }

  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      std::array<VoterId, 4> by_combo{0, 0, 0, 0};
      const auto& [a, b] = pairs[i];
      const auto& [c, d] = pairs[j];
      for (VoterId v = 1; v <= n; ++v) {
        const int combo = (p.prefers(v, a, b) ? 0 : 2) + (p.prefers(v, c, d) ? 0 : 1);
        if (by_combo[combo] == 0) by_combo[combo] = v;
      }
      if (by_combo[0] && by_combo[1] && by_combo[2] && by_combo[3])
        return SCWitness{SCWitnessKind::Delta4x4,
                         {by_combo[0], by_combo[1], by_combo[2], by_combo[3]},
                         {pairs[i], pairs[j]}};
    }
  return std::nullopt;
}

}  // namespace eucdom
