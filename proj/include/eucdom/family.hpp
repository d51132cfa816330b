#pragma once

#include <future>
#include <optional>
#include <string>
#include <vector>

#include "eucdom/axes.hpp"
#include "eucdom/crossing.hpp"
#include "eucdom/euclid.hpp"
#include "eucdom/exactlp.hpp"
#include "eucdom/profile.hpp"

// The minimal non-Euclidean family: for every k >= 2 a profile with 2k voters
// and 4k alternatives that has no one-dimensional Euclidean embedding, while
// dropping any single voter s leaves a profile embedded by the closed-form
// positions E_s / F_s below.

namespace eucdom::family {

inline void check_k(int k) {
  if (k < 2) throw std::invalid_argument("family parameter k must be at least 2, got " + std::to_string(k));
}

inline void check_ks(int k, int s) {
  check_k(k);
  if (s < 1 || s > 2 * k)
    throw std::out_of_range("deleted voter s=" + std::to_string(s) + " outside 1.." + std::to_string(2 * k));
}

/// Voters 2i-1 and 2i (i < k) and the special last couple, best first.
inline Profile gen_profile(int k) {
  check_k(k);
  const int m = 4 * k;
  auto x_piece = [&](int i, std::vector<int>& row) {  // 2k+2i-2 down to 2i+2
    for (int a = 2 * k + 2 * i - 2; a >= 2 * i + 2; --a) row.push_back(a);
  };
  auto y_piece = [&](int i, std::vector<int>& row) {  // 2i-2 down to 1
    for (int a = 2 * i - 2; a >= 1; --a) row.push_back(a);
  };
  auto z_piece = [&](int i, std::vector<int>& row) {  // 2k+2i+1 up to 4k
    for (int a = 2 * k + 2 * i + 1; a <= m; ++a) row.push_back(a);
  };

  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= k - 1; ++i) {
    std::vector<int> odd, even;
    x_piece(i, odd);
    for (int a : {2 * i + 1, 2 * k + 2 * i - 1, 2 * i, 2 * i - 1, 2 * k + 2 * i}) odd.push_back(a);
    y_piece(i, odd);
    z_piece(i, odd);

    x_piece(i, even);
    for (int a : {2 * k + 2 * i - 1, 2 * k + 2 * i, 2 * i + 1, 2 * i, 2 * i - 1}) even.push_back(a);
    y_piece(i, even);
    z_piece(i, even);

    rows.push_back(std::move(odd));
    rows.push_back(std::move(even));
  }

  std::vector<int> second_last, last;
  x_piece(k, second_last);
  for (int a : {2 * k + 1, 4 * k - 1, 2 * k, 2 * k - 1, 4 * k}) second_last.push_back(a);
  y_piece(k, second_last);

  x_piece(k, last);
  for (int a = 2 * k + 1; a >= 2; --a) last.push_back(a);
  for (int a : {4 * k - 1, 4 * k, 1}) last.push_back(a);

  rows.push_back(std::move(second_last));
  rows.push_back(std::move(last));
  return Profile::from_rows(rows);
}

/// Integer alternative positions E_s[1..4k]; index 0 unused.
inline std::vector<Integer> alternative_positions(int k, int s) {
  check_ks(k, s);
  const int m = 4 * k;
  auto residue = [&](int x) {  // least nonnegative residue mod 4k; the arguments used are odd, so never 0
    const int r = ((x % m) + m) % m;
    if (r == 0) throw std::logic_error("odd argument reduced to 0 mod 4k");
    return r;
  };

  std::vector<Integer> e(static_cast<std::size_t>(m) + 1);
  e[1] = 0;
  for (int i = 1; i <= k; ++i) {
    e[2 * i] = e[2 * i - 1] + residue(4 * i - 2 * s - 3);
    if (i <= k - 1) e[2 * i + 1] = e[2 * i] + 2;
  }
  for (int i = 1; i <= k - 1; ++i) {
    const int at = 2 * k + 2 * i - 1;
    if (s != 2 * i - 1)
      e[at] = e[at - 1] + e[2 * k + 2 * i - 3] - e[2 * i + 1] + 2;
    else
      e[at] = e[at - 1] + e[2 * k + 2 * i - 3] - e[2 * i + 2] + 2;
    e[at + 1] = e[at] + residue(4 * i - 2 * s - 1);
  }
  if (s != 2 * k) {
    e[m - 1] = e[m - 2] + e[m - 3] - e[2] + 2;
    e[m] = e[m - 1] + e[2] - e[1] - 2;
  } else {
    e[m - 1] = e[m - 2] + e[m - 3] - e[2 * k + 1] + 2;
    e[m] = e[m - 1] + e[2 * k + 1] - e[2 * k - 1];
  }
  return e;
}

/// E_s and F_s as an embedding that excludes voter s. Every voter, s
/// included, sits at the average of four alternative positions.
inline Embedding gen_embedding(int k, int s) {
  const auto e = alternative_positions(k, s);
  const int m = 4 * k, n = 2 * k;
  Embedding out(m, n, s);
  for (AlternativeId a = 1; a <= m; ++a) out.set_alternative(a, Rational(e[a]));
  auto average = [&](int a, int b, int c, int d) { return Rational(e[a] + e[b] + e[c] + e[d], Integer(4)); };
  for (int i = 1; i <= k - 1; ++i) {
    out.set_voter(2 * i - 1, average(2 * i - 1, 2 * i, 2 * k + 2 * i - 1, 2 * k + 2 * i));
    out.set_voter(2 * i, average(2 * i + 1, 2 * i + 2, 2 * k + 2 * i - 1, 2 * k + 2 * i));
  }
  if (s != 2 * k)
    out.set_voter(2 * k - 1, average(2 * k - 1, 2 * k, m - 1, m));
  else
    out.set_voter(2 * k - 1, average(2 * k - 2, 2 * k + 1, m - 1, m));
  out.set_voter(2 * k, average(1, 2, m - 1, m));
  return out;
}

/// Gaps E_s[i] - E_s[i-1] for i = 2..4k.
inline std::vector<Integer> distance_row(int k, int s) {
  const auto e = alternative_positions(k, s);
  std::vector<Integer> row;
  for (int i = 2; i <= 4 * k; ++i) row.push_back(e[i] - e[i - 1]);
  return row;
}

// ---------------------------------------------------------------------------
// Identities and inequalities satisfied by E_s.

struct ClauseResult {
  std::string name;
  bool applicable = true;      // false when the clause's indices fall outside 1..4k
  std::string counterexample;  // empty iff the clause holds
  bool pass() const { return counterexample.empty(); }
};

struct LemmaReport {
  int k = 0, s = 0;
  std::vector<ClauseResult> clauses;
  bool pass() const {
    for (const auto& c : clauses)
      if (!c.pass()) return false;
    return true;
  }
  const ClauseResult* find(const std::string& name) const {
    for (const auto& c : clauses)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Evaluates every clause over its full index range on E_s. Clauses whose
/// closed forms are only claimed for s in {1, 2} are skipped (not applicable)
/// for other s.
inline LemmaReport check_lemmas(int k, int s) {
  const auto e = alternative_positions(k, s);
  const int m = 4 * k;
  LemmaReport report{k, s, {}};
  auto tag = [&](const std::string& what) { return "k=" + std::to_string(k) + " s=" + std::to_string(s) + " " + what; };
  auto equality = [&](const std::string& name, bool applicable, auto lhs_fn, Integer rhs, const std::string& where) {
    ClauseResult c{name, applicable, {}};
    if (applicable) {
      const Integer lhs = lhs_fn();
      if (lhs != rhs) c.counterexample = tag(where + ": got " + lhs.str() + ", expected " + rhs.str());
    }
    report.clauses.push_back(std::move(c));
  };

  {
    ClauseResult c{"chain-increasing", true, {}};
    for (int x = 2; x <= m && c.pass(); ++x)
      if (e[x] <= e[x - 1])
        c.counterexample = tag("E[" + std::to_string(x - 1) + "]=" + e[x - 1].str() + " >= E[" + std::to_string(x) +
                               "]=" + e[x].str());
    report.clauses.push_back(std::move(c));
  }

  equality("e2-closed-form", true, [&] { return e[2]; }, Integer(4 * k - 2 * s + 1), "E[2]");
  equality("e3-closed-form", true, [&] { return e[3]; }, Integer(4 * k - 2 * s + 3), "E[3]");
  equality("e4-closed-form", true, [&] { return e[4]; },
           Integer(s <= 2 ? 4 * k - 4 * s + 8 : 8 * k - 4 * s + 8), "E[4]");
  const bool low_s = s == 1 || s == 2;
  equality("gap-2k-2-closed-form", low_s && 2 * k - 3 >= 1, [&] { return Integer(e[2 * k - 2] - e[2 * k - 3]); },
           Integer(4 * k - 2 * s - 7), "E[2k-2]-E[2k-3]");
  equality("gap-2k-4-closed-form", low_s && 2 * k - 5 >= 1, [&] { return Integer(e[2 * k - 4] - e[2 * k - 5]); },
           Integer(4 * k - 2 * s - 11), "E[2k-4]-E[2k-5]");

  {
    ClauseResult c{"upper-gap-plus-2", true, {}};
    for (int i = 1; i <= k && c.pass(); ++i) {
      const bool applies = (i <= k - 1 && s != 2 * i - 1) || (i == k && s != 2 * k - 1 && s != 2 * k);
      if (!applies) continue;
      const Integer lhs = e[2 * k + 2 * i] - e[2 * k + 2 * i - 1];
      const Integer rhs = e[2 * i] - e[2 * i - 1] + 2;
      if (lhs != rhs) c.counterexample = tag("i=" + std::to_string(i) + ": " + lhs.str() + " != " + rhs.str());
    }
    report.clauses.push_back(std::move(c));
  }
  {
    ClauseResult c{"upper-gap-minus-2", true, {}};
    for (int i = 1; i <= k - 1 && c.pass(); ++i) {
      if (s == 2 * i) continue;
      const Integer lhs = e[2 * k + 2 * i] - e[2 * k + 2 * i - 1];
      const Integer rhs = e[2 * i + 2] - e[2 * i + 1] - 2;
      if (lhs != rhs) c.counterexample = tag("i=" + std::to_string(i) + ": " + lhs.str() + " != " + rhs.str());
    }
    report.clauses.push_back(std::move(c));
  }
  {
    ClauseResult c{"gap-at-least-index-gap", true, {}};
    for (int x = 1; x <= m && c.pass(); ++x)
      for (int y = 1; y <= x && c.pass(); ++y)
        if (e[x] - e[y] < x - y)
          c.counterexample = tag("x=" + std::to_string(x) + " y=" + std::to_string(y) + ": E[x]-E[y]=" +
                                 Integer(e[x] - e[y]).str());
    report.clauses.push_back(std::move(c));
  }
  {
    ClauseResult c{"odd-step-at-least-2", true, {}};
    for (int i = 1; i <= 2 * k - 1 && c.pass(); ++i)
      if (e[2 * i + 1] - e[2 * i] < 2)
        c.counterexample = tag("i=" + std::to_string(i) + ": E[2i+1]-E[2i]=" + Integer(e[2 * i + 1] - e[2 * i]).str());
    report.clauses.push_back(std::move(c));
  }
  {
    ClauseResult c{"upper-dominates-sum", true, {}};
    for (int i = 1; i <= k - 1 && c.pass(); ++i) {
      const Integer lhs = e[2 * k + 2 * i - 1];
      const Integer rhs = e[2 * k] + e[2 * i] + 2;
      if (lhs < rhs) c.counterexample = tag("i=" + std::to_string(i) + ": " + lhs.str() + " < " + rhs.str());
    }
    report.clauses.push_back(std::move(c));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Non-Euclideanness along the increasing axis.

/// The two voter preferences whose midpoint conditions add up to one cycle
/// row: `voter` ranks first_better > first_worse and second_better > second_worse.
struct CycleRowSource {
  VoterId voter;
  AlternativeId first_better, first_worse;
  AlternativeId second_better, second_worse;
};

struct CycleCertificate {
  HomogeneousSystem system;  // over E[1..4k]
  RationalVector certificate;
  std::vector<CycleRowSource> sources;  // one per row
};

/// 2k inequalities over E[1..4k] forced by the increasing axis; they sum to
/// 0 < 0, so the all-ones vector certifies infeasibility.
inline CycleCertificate noneuclid_certificate(int k) {
  check_k(k);
  const int m = 4 * k;
  HomogeneousSystem sys(m);
  std::vector<CycleRowSource> sources;
  auto add = [&](std::string label, int plus1, int plus2, int minus1, int minus2, CycleRowSource src) {
    RationalVector row(static_cast<std::size_t>(m));
    row[plus1 - 1] += 1;
    row[plus2 - 1] += 1;
    row[minus1 - 1] -= 1;
    row[minus2 - 1] -= 1;
    sys.add_row(std::move(row), std::move(label));
    sources.push_back(src);
  };
  for (int i = 1; i <= k; ++i)
    add("odd-voter " + std::to_string(i), 2 * k + 2 * i - 1, 2 * i, 2 * k + 2 * i, 2 * i - 1,
        {2 * i - 1, 2 * k + 2 * i - 1, 2 * i, 2 * i - 1, 2 * k + 2 * i});
  for (int i = 1; i <= k - 1; ++i)
    add("even-voter " + std::to_string(i), 2 * k + 2 * i, 2 * i + 1, 2 * k + 2 * i - 1, 2 * i + 2,
        {2 * i, 2 * i + 2, 2 * k + 2 * i - 1, 2 * k + 2 * i, 2 * i + 1});
  add("last-voter", m, 1, m - 1, 2, {2 * k, 2, m - 1, m, 1});

  RationalVector ones(static_cast<std::size_t>(sys.num_rows()), Rational(1));
  if (!check_certificate(sys, ones)) throw std::logic_error("all-ones cycle certificate does not validate");
  return CycleCertificate{std::move(sys), std::move(ones), std::move(sources)};
}

/// Every cycle row is the sum of two rows of the Full constraint system of
/// gen_profile(k) on the increasing axis, with the voter terms cancelling.
inline bool cycle_rows_in_full_system(int k) {
  const auto cert = noneuclid_certificate(k);
  const Profile p = gen_profile(k);
  const int m = p.num_alternatives();
  const auto full = build_constraints(p, Axis::identity(m), ConstraintMode::Full);
  auto find_row = [&](VoterId v, AlternativeId better, AlternativeId worse) -> const RationalVector* {
    const std::string label = "v" + std::to_string(v) + " " + std::to_string(better) + ">" + std::to_string(worse);
    for (int r = 0; r < full.num_rows(); ++r)
      if (full.label(r) == label) return &full.row(r);
    return nullptr;
  };
  for (int r = 0; r < cert.system.num_rows(); ++r) {
    const auto& src = cert.sources[static_cast<std::size_t>(r)];
    const auto* first = find_row(src.voter, src.first_better, src.first_worse);
    const auto* second = find_row(src.voter, src.second_better, src.second_worse);
    if (!first || !second) return false;
    for (int j = 0; j < full.num_vars(); ++j) {
      const Rational sum = (*first)[j] + (*second)[j];
      const Rational expected = j < m ? cert.system.row(r)[j] : Rational(0);
      if (sum != expected) return false;
    }
  }
  return true;
}

/// The increasing axis is the only canonical single-peaked axis.
inline bool canonical_axes_check(int k) {
  const Profile p = gen_profile(k);
  const auto axes = enumerate_axes(p);
  return !axes.truncated && axes.axes.size() == 1 && axes.axes.front() == Axis::identity(p.num_alternatives());
}

/// v1, ..., v_{2k-2}, v_{2k}, v_{2k-1}.
inline VoterOrder swapped_tail_order(int k) {
  check_k(k);
  std::vector<int> order;
  for (int v = 1; v <= 2 * k - 2; ++v) order.push_back(v);
  order.push_back(2 * k);
  order.push_back(2 * k - 1);
  return VoterOrder(std::move(order));
}

inline bool sc_order_check(int k) { return is_single_crossing_on(gen_profile(k), swapped_tail_order(k)); }

/// Checks gen_embedding(k, s) against gen_profile(k) without voter s.
/// Nothing when the closed form puts two alternatives on the same point,
/// which happens for some s when k is small.
inline std::optional<VerificationReport> verify_closed_form(int k, int s,
                                                            ConstraintMode mode = ConstraintMode::Full) {
  const Embedding e = gen_embedding(k, s);
  try {
    e.validate_alternatives();
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return verify_embedding(delete_voter(gen_profile(k), s), e, mode);
}

// ---------------------------------------------------------------------------

struct DeletionOutcome {
  VoterId s = 0;
  bool closed_form_ok = false;
  std::size_t closed_form_violations = 0;
  bool closed_form_collides = false;         // two alternatives on one point
  std::optional<EuclideanStatus> lp_status;  // set when the LP recognizer ran
  bool lp_embedding_ok = false;              // LP witness re-verified
  bool required_ok = false;
};

struct MinimalityReport {
  int k = 0;
  EuclideanStatus full_status = EuclideanStatus::Unknown;
  bool certificates_valid = false;
  std::vector<DeletionOutcome> deletions;  // ordered by s

  bool not_euclidean_ok() const { return full_status == EuclideanStatus::NotEuclidean && certificates_valid; }
  bool pass() const {
    if (!not_euclidean_ok()) return false;
    for (const auto& d : deletions)
      if (!d.required_ok) return false;
    return true;
  }
};

/// Checks that gen_profile(k) is not Euclidean and that every single-voter
/// deletion is. For k >= 5 the closed-form embedding must verify; for smaller
/// k the LP recognizer is the authority and the closed form is reported
/// without being required. `lp_for_all` runs the recognizer for every k.
inline MinimalityReport minimality_check(int k, bool lp_for_all = false) {
  check_k(k);
  const Profile p = gen_profile(k);
  MinimalityReport report;
  report.k = k;

  const auto full = recognize_euclidean(p);
  report.full_status = full.status;
  report.certificates_valid = true;
  for (const auto& c : full.certificates)
    report.certificates_valid = report.certificates_valid && check_certificate(c.system, c.certificate);

  const bool run_lp = lp_for_all || k <= 4;
  std::vector<std::future<DeletionOutcome>> pending;
  for (VoterId s = 1; s <= 2 * k; ++s)
    pending.push_back(std::async(std::launch::async, [&p, k, s, run_lp] {
      DeletionOutcome d;
      d.s = s;
      const Profile rest = delete_voter(p, s);
      const auto closed = verify_closed_form(k, s);
      d.closed_form_collides = !closed;
      d.closed_form_ok = closed && closed->ok;
      d.closed_form_violations = closed ? closed->violations.size() : 0;
      if (run_lp) {
        const auto lp = recognize_euclidean(rest);
        d.lp_status = lp.status;
        d.lp_embedding_ok = lp.embedding && verify_embedding(rest, *lp.embedding).ok;
      }
      const bool lp_ok = d.lp_status == EuclideanStatus::Euclidean && d.lp_embedding_ok;
      d.required_ok = k >= 5 ? d.closed_form_ok && (!run_lp || lp_ok) : lp_ok;
      return d;
    }));
  for (auto& f : pending) report.deletions.push_back(f.get());
  return report;
}

}  // namespace eucdom::family
