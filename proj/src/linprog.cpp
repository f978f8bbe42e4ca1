#include "diffeocert/linprog.hpp"

#include <stdexcept>

namespace diffeocert {

void LinearProgram::add_row(std::vector<Rational> coefficients, RowSense s, Rational b) {
  if (static_cast<int>(coefficients.size()) != num_vars)
    throw std::invalid_argument("row length does not match num_vars");
  rows.push_back(std::move(coefficients));
  sense.push_back(s);
  rhs.push_back(std::move(b));
}

namespace {

// Standard-form tableau for the phase-I / phase-II simplex.
//
// Free variables are split x_j = u_j - v_j; every row is flipped so its
// right-hand side is nonnegative; LessEqual rows get a slack column and
// every row gets an artificial column.  Bland's rule (smallest eligible
// index enters, smallest basic index leaves on ratio ties) guarantees
// termination, and exact rationals rule out cycling misjudgments.
struct Tableau {
  int m = 0;                 // rows
  int ncols = 0;             // structural + slack + artificial columns
  int first_artificial = 0;  // column index of the first artificial
  std::vector<std::vector<Rational>> a;    // m x ncols
  std::vector<Rational> b;                 // m, kept >= 0
  std::vector<int> basis;                  // m, column index basic in each row
  std::vector<int> flip;                   // m, +1 or -1 row scaling vs. original
  std::vector<bool> active;                // rows removed as redundant stay inactive
  // Column metadata: for structural columns, the original variable and sign.
  std::vector<int> col_var;   // -1 for slack/artificial
  std::vector<int> col_sign;  // +1 for u, -1 for v

  std::vector<Rational> cost;  // reduced cost row, length ncols
  Rational cost_rhs = 0;       // negated objective value

  void pivot(int row, int col) {
    const Rational inv = Rational(1) / a[row][col];
    for (int j = 0; j < ncols; ++j) a[row][j] *= inv;
    b[row] *= inv;
    a[row][col] = 1;  // guard against 1/x * x rounding; exact, but keep canonical
    for (int r = 0; r < m; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (int j = 0; j < ncols; ++j) a[r][j] -= factor * a[row][j];
      b[r] -= factor * b[row];
      a[r][col] = 0;
    }
    if (cost[col] != 0) {
      const Rational factor = cost[col];
      for (int j = 0; j < ncols; ++j) cost[j] -= factor * a[row][j];
      cost_rhs -= factor * b[row];
      cost[col] = 0;
    }
    basis[row] = col;
  }

  // One simplex run on the current cost row.  Returns false when an
  // unbounded descent direction is found (only possible in phase II).
  bool iterate(bool allow_artificial_entering) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncols; ++j) {
        if (!allow_artificial_entering && j >= first_artificial) break;
        if (cost[j] < 0) {
          enter = j;
          break;  // Bland: smallest index
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best_ratio = 0;
      for (int r = 0; r < m; ++r) {
        if (!active[r] || a[r][enter] <= 0) continue;
        const Rational ratio = b[r] / a[r][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

Tableau build_tableau(const LinearProgram& lp) {
  const int m = static_cast<int>(lp.rows.size());
  const int nv = lp.num_vars;
  std::vector<bool> nonneg = lp.nonnegative;
  nonneg.resize(static_cast<std::size_t>(nv), false);

  Tableau t;
  t.m = m;
  t.flip.assign(m, 1);
  t.active.assign(m, true);

  for (int j = 0; j < nv; ++j) {
    t.col_var.push_back(j);
    t.col_sign.push_back(1);
    if (!nonneg[j]) {
      t.col_var.push_back(j);
      t.col_sign.push_back(-1);
    }
  }
  const int structural = static_cast<int>(t.col_var.size());
  int slack_count = 0;
  for (int r = 0; r < m; ++r)
    if (lp.sense[r] == RowSense::LessEqual) ++slack_count;
  t.first_artificial = structural + slack_count;
  t.ncols = t.first_artificial + m;
  t.col_var.resize(t.ncols, -1);
  t.col_sign.resize(t.ncols, 0);

  t.a.assign(m, std::vector<Rational>(t.ncols, Rational(0)));
  t.b.assign(m, Rational(0));
  t.basis.assign(m, 0);

  int slack_index = structural;
  for (int r = 0; r < m; ++r) {
    t.flip[r] = lp.rhs[r] < 0 ? -1 : 1;
    for (int c = 0; c < structural; ++c)
      t.a[r][c] = Rational(t.flip[r] * t.col_sign[c]) * lp.rows[r][t.col_var[c]];
    if (lp.sense[r] == RowSense::LessEqual) {
      t.a[r][slack_index] = t.flip[r];
      ++slack_index;
    }
    t.a[r][t.first_artificial + r] = 1;
    t.b[r] = Rational(t.flip[r]) * lp.rhs[r];
    t.basis[r] = t.first_artificial + r;
  }

  // Phase-I cost: minimize the sum of artificials.  Reduced costs start as
  // c_j - sum_r a[r][j] (artificials themselves start at reduced cost 0).
  t.cost.assign(t.ncols, Rational(0));
  for (int j = 0; j < t.first_artificial; ++j)
    for (int r = 0; r < m; ++r) t.cost[j] -= t.a[r][j];
  t.cost_rhs = 0;
  for (int r = 0; r < m; ++r) t.cost_rhs -= t.b[r];
  return t;
}

std::vector<Rational> extract_point(const LinearProgram& lp, const Tableau& t) {
  std::vector<Rational> x(static_cast<std::size_t>(lp.num_vars), Rational(0));
  for (int r = 0; r < t.m; ++r) {
    if (!t.active[r]) continue;
    const int c = t.basis[r];
    if (c < static_cast<int>(t.col_var.size()) && t.col_var[c] >= 0)
      x[t.col_var[c]] += Rational(t.col_sign[c]) * t.b[r];
  }
  return x;
}

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x) {
  std::vector<bool> nonneg = lp.nonnegative;
  nonneg.resize(static_cast<std::size_t>(lp.num_vars), false);
  for (int j = 0; j < lp.num_vars; ++j)
    if (nonneg[j] && x[j] < 0) return false;
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    Rational lhs = 0;
    for (int j = 0; j < lp.num_vars; ++j) lhs += lp.rows[r][j] * x[j];
    if (lp.sense[r] == RowSense::Equal ? lhs != lp.rhs[r] : lhs > lp.rhs[r]) return false;
  }
  return true;
}

}  // namespace

bool verify_farkas(const LinearProgram& lp, const std::vector<Rational>& multipliers) {
  if (multipliers.size() != lp.rows.size()) return false;
  std::vector<bool> nonneg = lp.nonnegative;
  nonneg.resize(static_cast<std::size_t>(lp.num_vars), false);
  for (std::size_t r = 0; r < lp.rows.size(); ++r)
    if (lp.sense[r] == RowSense::LessEqual && multipliers[r] < 0) return false;
  // y^T A must vanish on free variables and be >= 0 on nonnegative ones
  // (a nonnegative combination can then never push below y^T b).
  for (int j = 0; j < lp.num_vars; ++j) {
    Rational col = 0;
    for (std::size_t r = 0; r < lp.rows.size(); ++r) col += multipliers[r] * lp.rows[r][j];
    if (nonneg[j] ? col < 0 : col != 0) return false;
  }
  Rational yb = 0;
  for (std::size_t r = 0; r < lp.rows.size(); ++r) yb += multipliers[r] * lp.rhs[r];
  return yb < 0;
}

LpFeasibility lp_feasible(const LinearProgram& lp) {
  if (lp.rows.size() != lp.rhs.size() || lp.rows.size() != lp.sense.size())
    throw std::invalid_argument("inconsistent linear program");
  LpFeasibility out;
  if (lp.rows.empty()) {
    out.feasible = true;
    out.point.assign(static_cast<std::size_t>(lp.num_vars), Rational(0));
    return out;
  }

  Tableau t = build_tableau(lp);
  if (!t.iterate(true)) throw std::logic_error("phase-I simplex reported unbounded");

  const Rational infeasibility = -t.cost_rhs;  // optimal sum of artificials
  if (infeasibility == 0) {
    out.feasible = true;
    out.point = extract_point(lp, t);
    if (!satisfies(lp, out.point))
      throw std::logic_error("simplex produced a point that fails exact verification");
    return out;
  }

  // Farkas multipliers from the phase-I duals: for artificial column r the
  // final reduced cost is 1 - y_r, so y_r = 1 - cost[art_r]; undo row flips.
  out.feasible = false;
  out.farkas.resize(static_cast<std::size_t>(t.m));
  for (int r = 0; r < t.m; ++r) {
    const Rational y = Rational(1) - t.cost[t.first_artificial + r];
    out.farkas[static_cast<std::size_t>(r)] = Rational(-t.flip[r]) * y;
  }
  if (!verify_farkas(lp, out.farkas))
    throw std::logic_error("simplex produced Farkas multipliers that fail exact verification");
  return out;
}

LpSolution lp_optimize(const LinearProgram& lp) {
  if (!lp.objective) throw std::invalid_argument("lp_optimize requires an objective");
  if (static_cast<int>(lp.objective->size()) != lp.num_vars)
    throw std::invalid_argument("objective length does not match num_vars");

  LpSolution out;
  Tableau t = build_tableau(lp);
  if (!lp.rows.empty()) {
    if (!t.iterate(true)) throw std::logic_error("phase-I simplex reported unbounded");
    if (-t.cost_rhs != 0) {
      out.status = LpStatus::Infeasible;
      out.farkas.resize(static_cast<std::size_t>(t.m));
      for (int r = 0; r < t.m; ++r) {
        const Rational y = Rational(1) - t.cost[t.first_artificial + r];
        out.farkas[static_cast<std::size_t>(r)] = Rational(-t.flip[r]) * y;
      }
      if (!verify_farkas(lp, out.farkas))
        throw std::logic_error("simplex produced Farkas multipliers that fail exact verification");
      return out;
    }
    // Drive leftover artificials out of the basis; an all-zero row is
    // redundant and goes inactive.
    for (int r = 0; r < t.m; ++r) {
      if (t.basis[r] < t.first_artificial) continue;
      int col = -1;
      for (int j = 0; j < t.first_artificial; ++j)
        if (t.a[r][j] != 0) {
          col = j;
          break;
        }
      if (col >= 0)
        t.pivot(r, col);
      else
        t.active[r] = false;
    }
  }

  // Phase II: install the real objective's reduced costs.
  std::vector<Rational> c(static_cast<std::size_t>(t.ncols), Rational(0));
  for (int j = 0; j < t.first_artificial; ++j)
    if (t.col_var[j] >= 0) c[j] = Rational(t.col_sign[j]) * (*lp.objective)[t.col_var[j]];
  t.cost = c;
  t.cost_rhs = 0;
  for (int r = 0; r < t.m; ++r) {
    if (!t.active[r] || c[t.basis[r]] == 0) continue;
    const Rational cb = c[t.basis[r]];
    for (int j = 0; j < t.ncols; ++j) t.cost[j] -= cb * t.a[r][j];
    t.cost_rhs -= cb * t.b[r];
  }

  if (!t.iterate(false)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.point = extract_point(lp, t);
  if (!satisfies(lp, out.point))
    throw std::logic_error("simplex produced a point that fails exact verification");
  out.value = 0;
  for (int j = 0; j < lp.num_vars; ++j) out.value += (*lp.objective)[j] * out.point[j];
  return out;
}

}  // namespace diffeocert
