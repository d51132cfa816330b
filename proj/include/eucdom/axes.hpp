#pragma once

#include <optional>
#include <vector>

#include "eucdom/error.hpp"
#include "eucdom/profile.hpp"

namespace eucdom {

inline constexpr int kDefaultAxisCap = 1024;

/// True iff every voter's ranks along `ax` climb to one peak and then fall.
/// Checked by peeling: each voter's worst remaining alternative must sit at
/// one end of the still-unpeeled stretch of the axis.
inline bool is_single_peaked_on(const Profile& p, const Axis& ax) {
  const int m = p.num_alternatives();
  if (ax.size() != m)
    throw DimensionError("axis has " + std::to_string(ax.size()) + " alternatives, profile has " +
                         std::to_string(m));
  for (const auto& ranking : p.rankings()) {
    int left = 0, right = m - 1;
    for (int t = m - 1; t > 0; --t) {
      const int at = ax.position(ranking[t]);
      if (at == left)
        ++left;
      else if (at == right)
        --right;
      else
        return false;
    }
  }
  return true;
}

struct AxisEnumeration {
  std::vector<Axis> axes;  // canonical, lexicographic
  bool truncated = false;  // more than `cap` axes exist
};

namespace detail {

/// Left-to-right depth-first construction of single-peaked axes. Candidates
/// are tried in increasing id order, so complete axes come out in
/// lexicographic order. Two prunings keep it from wandering:
///  - every voter's worst unplaced alternative must go either next or to the
///    far right end, which pins the right end down early;
///  - each voter's ranks along the prefix must stay unimodal, and once a
///    voter is descending every unplaced alternative must rank below the last
///    placed one.
class AxisSearch {
 public:
  AxisSearch(const Profile& p, int cap) : p_(p), m_(p.num_alternatives()), n_(p.num_voters()), cap_(cap) {}

  AxisEnumeration run() {
    std::vector<int> prefix;
    std::vector<char> used(static_cast<std::size_t>(m_) + 1, 0);
    std::vector<VoterPhase> phases(static_cast<std::size_t>(n_));
    descend(prefix, used, 0, phases);
    AxisEnumeration out;
    out.truncated = static_cast<int>(found_.size()) > cap_;
    if (out.truncated) found_.resize(static_cast<std::size_t>(cap_));
    out.axes = std::move(found_);
    return out;
  }

 private:
  struct VoterPhase {
    int last_rank = -1;
    bool descending = false;
  };

  bool done() const { return static_cast<int>(found_.size()) > cap_; }

  void descend(std::vector<int>& prefix, std::vector<char>& used, int right_end,
               const std::vector<VoterPhase>& phases) {
    if (done()) return;
    const int placed = static_cast<int>(prefix.size());
    if (placed == m_) {
      Axis ax(prefix);
      if (ax.is_canonical()) found_.push_back(std::move(ax));
      return;
    }
    const int remaining = m_ - placed;

    // Worst unplaced alternative of every voter.
    std::vector<int> worst;
    for (VoterId v = 1; v <= n_; ++v) {
      const auto& ranking = p_.ranking(v);
      for (int t = m_ - 1; t >= 0; --t)
        if (!used[ranking[t]]) {
          if (std::find(worst.begin(), worst.end(), ranking[t]) == worst.end())
            worst.push_back(ranking[t]);
          break;
        }
    }

    for (int c = 1; c <= m_; ++c) {
      if (used[c]) continue;
      if (c == right_end && remaining > 1) continue;

      int new_right = right_end;
      bool ok = true;
      for (int w : worst) {
        if (w == c) continue;
        if (new_right == 0)
          new_right = w;
        else if (new_right != w)
          ok = false;
      }
      if (!ok) continue;
      const int left_end = placed == 0 ? c : prefix.front();
      if (new_right != 0 && remaining > 1 && new_right < left_end) continue;

      std::vector<VoterPhase> next = phases;
      for (VoterId v = 1; v <= n_ && ok; ++v) {
        auto& phase = next[static_cast<std::size_t>(v - 1)];
        const int r = p_.rank(v, c);
        if (phase.last_rank >= 0) {
          if (phase.descending) {
            if (r < phase.last_rank) ok = false;
          } else if (r > phase.last_rank) {
            phase.descending = true;
          }
        }
        phase.last_rank = r;
        if (ok && phase.descending) {
          // everything still unplaced lies right of c, so it must rank below c
          const auto& ranking = p_.ranking(v);
          for (int t = 0; t < r; ++t)
            if (!used[ranking[t]]) {
              ok = false;
              break;
            }
        }
      }
      if (!ok) continue;

      used[c] = 1;
      prefix.push_back(c);
      descend(prefix, used, new_right, next);
      prefix.pop_back();
      used[c] = 0;
      if (done()) return;
    }
  }

  const Profile& p_;
  int m_, n_, cap_;
  std::vector<Axis> found_;
};

}  // namespace detail

/// All canonical single-peaked axes of `p` in lexicographic order, at most `cap`
/// of them. Mirror images count once. Empty iff `p` is not single-peaked.
inline AxisEnumeration enumerate_axes(const Profile& p, int cap = kDefaultAxisCap) {
  if (cap < 1) throw std::invalid_argument("axis cap must be at least 1");
  return detail::AxisSearch(p, cap).run();
}

// ---------------------------------------------------------------------------
// Forbidden substructures for single-peakedness.

enum class SPWitnessKind {
  Triple,     // 3 voters; each of a, b, c is ranked last among {a,b,c} by one of them
  Interval4,  // 2 voters; a>b>c with d>b, and c>b>a with d>b
};

struct SPWitness {
  SPWitnessKind kind;
  std::vector<VoterId> voters;              // Triple: v1,v2,v3; Interval4: v1,v2
  std::vector<AlternativeId> alternatives;  // roles a,b,c(,d)
};

/// Re-checks the literal pattern the witness claims.
inline bool witness_holds(const Profile& p, const SPWitness& w) {
  auto pref = [&](VoterId v, AlternativeId x, AlternativeId y) { return p.prefers(v, x, y); };
  if (w.kind == SPWitnessKind::Triple) {
    if (w.voters.size() != 3 || w.alternatives.size() != 3) return false;
    const int a = w.alternatives[0], b = w.alternatives[1], c = w.alternatives[2];
    if (a == b || b == c || a == c) return false;
    const VoterId v1 = w.voters[0], v2 = w.voters[1], v3 = w.voters[2];
    return pref(v1, b, a) && pref(v1, c, a) && pref(v2, a, b) && pref(v2, c, b) && pref(v3, a, c) &&
           pref(v3, b, c);
  }
  if (w.voters.size() != 2 || w.alternatives.size() != 4) return false;
  const int a = w.alternatives[0], b = w.alternatives[1], c = w.alternatives[2], d = w.alternatives[3];
  if (a == b || a == c || a == d || b == c || b == d || c == d) return false;
  const VoterId v1 = w.voters[0], v2 = w.voters[1];
  return pref(v1, a, b) && pref(v1, b, c) && pref(v1, d, b) && pref(v2, c, b) && pref(v2, b, a) &&
         pref(v2, d, b);
}

/// Brute-force search for one of the two forbidden patterns. Triples are
/// scanned first (alternative triples in lexicographic order), then 4-sets of
/// alternatives against voter pairs. Returns nothing iff `p` is single-peaked.
inline std::optional<SPWitness> find_sp_obstruction(const Profile& p) {
  const int m = p.num_alternatives(), n = p.num_voters();

  for (int x = 1; x <= m; ++x)
    for (int y = x + 1; y <= m; ++y)
      for (int z = y + 1; z <= m; ++z) {
        const int triple[3] = {x, y, z};
        VoterId last_by[3] = {0, 0, 0};
        for (VoterId v = 1; v <= n; ++v) {
          int worst = 0;
          for (int r = 1; r < 3; ++r)
            if (p.rank(v, triple[r]) > p.rank(v, triple[worst])) worst = r;
          if (last_by[worst] == 0) last_by[worst] = v;
        }
        if (last_by[0] && last_by[1] && last_by[2])
          return SPWitness{SPWitnessKind::Triple, {last_by[0], last_by[1], last_by[2]}, {x, y, z}};
      }

  static constexpr int kRoles[24][4] = {
      {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
      {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 2, 0},
      {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0},
      {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
  for (int w = 1; w <= m; ++w)
    for (int x = w + 1; x <= m; ++x)
      for (int y = x + 1; y <= m; ++y)
        for (int z = y + 1; z <= m; ++z) {
          const int set[4] = {w, x, y, z};
          for (VoterId v1 = 1; v1 <= n; ++v1)
            for (VoterId v2 = 1; v2 <= n; ++v2) {
              if (v1 == v2) continue;
              for (const auto& role : kRoles) {
                SPWitness cand{SPWitnessKind::Interval4,
                               {v1, v2},
                               {set[role[0]], set[role[1]], set[role[2]], set[role[3]]}};
                if (witness_holds(p, cand)) return cand;
              }
            }
        }
  return std::nullopt;
}

}  // namespace eucdom
