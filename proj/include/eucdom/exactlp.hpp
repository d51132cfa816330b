#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eucdom/error.hpp"
#include "eucdom/rational.hpp"

namespace eucdom {

/// Strict homogeneous system: <row, x> < 0 for every row. There is no
/// constant column, so feasibility is invariant under positive scaling of x.
class HomogeneousSystem {
 public:
  explicit HomogeneousSystem(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 1) throw std::invalid_argument("system needs at least one variable");
  }

  HomogeneousSystem(int num_vars, std::vector<RationalVector> rows, std::vector<std::string> labels = {})
      : HomogeneousSystem(num_vars) {
    if (!labels.empty() && labels.size() != rows.size())
      throw DimensionError("label count does not match row count");
    for (std::size_t r = 0; r < rows.size(); ++r)
      add_row(std::move(rows[r]), labels.empty() ? "r" + std::to_string(r + 1) : std::move(labels[r]));
  }

  void add_row(RationalVector row, std::string label) {
    if (static_cast<int>(row.size()) != num_vars_)
      throw DimensionError("row '" + label + "' has " + std::to_string(row.size()) +
                           " coefficients, expected " + std::to_string(num_vars_));
    rows_.push_back(std::move(row));
    labels_.push_back(std::move(label));
  }

  int num_vars() const noexcept { return num_vars_; }
  int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
  const RationalVector& row(int r) const { return rows_.at(static_cast<std::size_t>(r)); }
  const std::vector<RationalVector>& rows() const noexcept { return rows_; }
  const std::string& label(int r) const { return labels_.at(static_cast<std::size_t>(r)); }

 private:
  int num_vars_;
  std::vector<RationalVector> rows_;
  std::vector<std::string> labels_;
};

/// x with <row, x> <= -1 for every row.
struct Feasible {
  RationalVector witness;
};

/// y >= 0, y != 0, sum_r y[r] * row_r = 0. Normalized to coprime integers.
struct Infeasible {
  RationalVector certificate;
};

using Feasibility = std::variant<Feasible, Infeasible>;

inline bool is_feasible(const Feasibility& f) { return std::holds_alternative<Feasible>(f); }

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) sum += a[i] * b[i];
  return sum;
}

/// Strict form: every <row, x> < 0.
inline bool check_witness(const HomogeneousSystem& sys, const RationalVector& x) {
  if (static_cast<int>(x.size()) != sys.num_vars())
    throw DimensionError("witness has " + std::to_string(x.size()) + " entries, system has " +
                         std::to_string(sys.num_vars()) + " variables");
  for (const auto& row : sys.rows())
    if (dot(row, x) >= 0) return false;
  return true;
}

inline bool check_certificate(const HomogeneousSystem& sys, const RationalVector& y) {
  if (static_cast<int>(y.size()) != sys.num_rows())
    throw DimensionError("certificate has " + std::to_string(y.size()) + " entries, system has " +
                         std::to_string(sys.num_rows()) + " rows");
  bool nonzero = false;
  for (const auto& value : y) {
    if (value < 0) return false;
    if (value > 0) nonzero = true;
  }
  if (!nonzero) return false;
  for (int j = 0; j < sys.num_vars(); ++j) {
    Rational sum = 0;
    for (int r = 0; r < sys.num_rows(); ++r)
      if (!y[r].is_zero()) sum += y[r] * sys.row(r)[j];
    if (!sum.is_zero()) return false;
  }
  return true;
}

namespace detail {

/// Dense phase-1 tableau for  min 1'a  s.t.  M z + a = b,  z, a >= 0,  b >= 0,
/// pivoted with Bland's rule. Columns are the structural z first, then the
/// artificials a; the artificials stay in the tableau so the optimal duals
/// can be read off their reduced costs.
class PhaseOne {
 public:
  PhaseOne(const std::vector<RationalVector>& constraint_rows, const RationalVector& rhs)
      : rows_(static_cast<int>(constraint_rows.size())),
        structural_(static_cast<int>(constraint_rows.front().size())),
        cols_(structural_ + rows_) {
    tableau_.assign(static_cast<std::size_t>(rows_), RationalVector(static_cast<std::size_t>(cols_)));
    rhs_ = rhs;
    basis_.resize(static_cast<std::size_t>(rows_));
    cost_.assign(static_cast<std::size_t>(cols_), Rational(0));
    objective_ = 0;
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < structural_; ++j) tableau_[i][j] = constraint_rows[i][j];
      tableau_[i][structural_ + i] = 1;
      basis_[i] = structural_ + i;
      for (int j = 0; j < structural_; ++j) cost_[j] -= tableau_[i][j];
      objective_ += rhs_[i];
    }
  }

  /// Runs to optimality, or stops early once the objective reaches zero.
  void solve() {
    for (;;) {
      if (objective_.is_zero()) return;
      int entering = -1;
      for (int j = 0; j < cols_; ++j)
        if (cost_[j] < 0) {
          entering = j;
          break;
        }
      if (entering < 0) return;

      int leaving = -1;
      Rational best_ratio;
      for (int i = 0; i < rows_; ++i) {
        const Rational& a = tableau_[i][entering];
        if (a <= 0) continue;
        Rational ratio = rhs_[i] / a;
        if (leaving < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      // Phase 1 is bounded below by 0, so a negative reduced cost always has
      // a blocking row.
      if (leaving < 0) throw std::logic_error("phase-1 simplex reported unbounded");
      pivot(leaving, entering);
    }
  }

  const Rational& objective() const { return objective_; }

  /// Dual value of constraint i: 1 - reduced cost of its artificial.
  Rational dual(int i) const { return Rational(1) - cost_[structural_ + i]; }

  /// Value of structural column j in the current basic solution.
  Rational primal(int j) const {
    for (int i = 0; i < rows_; ++i)
      if (basis_[i] == j) return rhs_[i];
    return Rational(0);
  }

 private:
  void pivot(int r, int c) {
    const Rational inv = Rational(1) / tableau_[r][c];
    std::vector<int> support;
    for (int j = 0; j < cols_; ++j)
      if (!tableau_[r][j].is_zero()) {
        tableau_[r][j] *= inv;
        support.push_back(j);
      }
    rhs_[r] *= inv;

    auto eliminate = [&](RationalVector& target, Rational& target_rhs) {
      if (target[c].is_zero()) return;
      const Rational factor = target[c];
      for (int j : support) target[j] -= factor * tableau_[r][j];
      target_rhs -= factor * rhs_[r];
    };
    for (int i = 0; i < rows_; ++i)
      if (i != r) eliminate(tableau_[i], rhs_[i]);
    // The objective row tracks reduced costs and minus the objective value.
    Rational minus_objective = -objective_;
    eliminate(cost_, minus_objective);
    objective_ = -minus_objective;
    basis_[r] = c;
  }

  int rows_, structural_, cols_;
  std::vector<RationalVector> tableau_;
  RationalVector rhs_;
  RationalVector cost_;
  Rational objective_;
  std::vector<int> basis_;
};

/// Scales a nonzero nonnegative rational vector to coprime integers.
inline RationalVector primitive_integer(RationalVector v) {
  Integer den_lcm = 1;
  for (const auto& x : v)
    if (!x.is_zero()) den_lcm = lcm(den_lcm, Integer(boost::multiprecision::denominator(x)));
  Integer num_gcd = 0;
  for (auto& x : v) {
    x *= den_lcm;
    if (!x.is_zero()) num_gcd = gcd(num_gcd, Integer(boost::multiprecision::numerator(x)));
  }
  if (num_gcd > 1)
    for (auto& x : v) x /= num_gcd;
  return v;
}

}  // namespace detail

/// Decides whether some x has <row, x> < 0 for all rows.
///
/// Works on the Farkas alternative  y >= 0, A'y = 0, 1'y = 1  with a phase-1
/// simplex. If that system is feasible its basic solution is the
/// infeasibility certificate. Otherwise the optimal phase-1 duals (x, t)
/// satisfy A x + t 1 <= 0 with t > 0, and x / t is a witness with margin 1.
/// The tableau has only num_vars + 1 rows no matter how many constraints
/// the system has.
inline Feasibility feasible_strict(const HomogeneousSystem& sys) {
  if (sys.num_rows() == 0) throw std::invalid_argument("system has no rows");
  const int d = sys.num_vars(), rows = sys.num_rows();

  std::vector<RationalVector> alt(static_cast<std::size_t>(d + 1), RationalVector(static_cast<std::size_t>(rows)));
  for (int r = 0; r < rows; ++r) {
    for (int j = 0; j < d; ++j) alt[j][r] = sys.row(r)[j];
    alt[d][r] = 1;
  }
  RationalVector rhs(static_cast<std::size_t>(d + 1), Rational(0));
  rhs[d] = 1;

  detail::PhaseOne lp(alt, rhs);
  lp.solve();

  if (lp.objective().is_zero()) {
    RationalVector y(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) y[r] = lp.primal(r);
    y = detail::primitive_integer(std::move(y));
    if (!check_certificate(sys, y)) throw std::logic_error("simplex produced an invalid certificate");
    return Infeasible{std::move(y)};
  }

  const Rational t = lp.dual(d);
  RationalVector x(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) x[j] = lp.dual(j) / t;
  for (const auto& row : sys.rows())
    if (dot(row, x) > -1) throw std::logic_error("simplex produced an invalid witness");
  return Feasible{std::move(x)};
}

/// One row per line, "label: c1 c2 ... ck".
inline std::string dump_system(const HomogeneousSystem& sys) {
  std::string out;
  for (int r = 0; r < sys.num_rows(); ++r) {
    out += sys.label(r) + ":";
    for (const auto& c : sys.row(r)) out += " " + format_rational(c);
    out += "\n";
  }
  return out;
}

}  // namespace eucdom
