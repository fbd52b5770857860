#include "octi/lp.hpp"

#include <algorithm>

#include "octi/rep.hpp"

namespace octi {

LinearProgram::LinearProgram(int num_vars)
    : num_vars_(num_vars),
      lower_(static_cast<std::size_t>(num_vars), Rational(0)),
      fixed_(static_cast<std::size_t>(num_vars)),
      objective_(static_cast<std::size_t>(num_vars), Rational(0)) {}

void LinearProgram::set_lower_bound(int var, const Rational& lb) {
  lower_[static_cast<std::size_t>(var)] = lb;
}

void LinearProgram::fix_variable(int var, const Rational& value) {
  fixed_[static_cast<std::size_t>(var)] = value;
}

void LinearProgram::set_objective(int var, const Rational& coeff) {
  objective_[static_cast<std::size_t>(var)] = coeff;
}

int LinearProgram::add_constraint(const std::vector<std::pair<int, Rational>>& terms,
                                  const Rational& rhs) {
  rows_.push_back(terms);
  rhs_.push_back(rhs);
  return static_cast<int>(rows_.size()) - 1;
}

namespace {

// Dense two-phase simplex over shifted variables y = x - lower >= 0.
struct Tableau {
  int rows, cols;                       // constraint rows, structural columns
  std::vector<std::vector<Rational>> a;  // rows x cols
  std::vector<Rational> b;               // rhs, kept nonnegative
  std::vector<int> basis;                // per row: basic column (cols..cols+rows-1 = artificials)

  // Pivots on (r, c) where column c includes artificial columns encoded
  // implicitly: artificial j has a unit column e_j.
  void pivot(int r, int c, std::vector<std::vector<Rational>>& art) {
    Rational piv = c < cols ? a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]
                            : art[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - cols)];
    for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] /= piv;
    for (int j = 0; j < rows; ++j) art[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] /= piv;
    b[static_cast<std::size_t>(r)] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Rational f = c < cols ? a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]
                            : art[static_cast<std::size_t>(i)][static_cast<std::size_t>(c - cols)];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      for (int j = 0; j < rows; ++j)
        art[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * art[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(r)];
    }
    basis[static_cast<std::size_t>(r)] = c;
  }
};

}  // namespace

LinearProgram::Solution LinearProgram::solve() const {
  // Map structural variables to tableau columns (fixed variables drop out).
  std::vector<int> col_of(static_cast<std::size_t>(num_vars_), -1);
  int cols = 0;
  for (int v = 0; v < num_vars_; ++v) {
    if (!fixed_[static_cast<std::size_t>(v)]) col_of[static_cast<std::size_t>(v)] = cols++;
  }
  auto shift_of = [&](int v) -> Rational {
    return fixed_[static_cast<std::size_t>(v)] ? *fixed_[static_cast<std::size_t>(v)] : lower_[static_cast<std::size_t>(v)];
  };

  const int rows = static_cast<int>(rows_.size());
  Tableau t;
  t.rows = rows;
  t.cols = cols;
  t.a.assign(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols), Rational(0)));
  t.b.assign(static_cast<std::size_t>(rows), Rational(0));
  t.basis.assign(static_cast<std::size_t>(rows), -1);

  for (int i = 0; i < rows; ++i) {
    Rational rhs = rhs_[static_cast<std::size_t>(i)];
    for (const auto& [v, coeff] : rows_[static_cast<std::size_t>(i)]) {
      rhs -= coeff * shift_of(v);
      int c = col_of[static_cast<std::size_t>(v)];
      if (c >= 0) t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] += coeff;
    }
    t.b[static_cast<std::size_t>(i)] = rhs;
  }

  // Keep rhs nonnegative; artificial j starts basic in row j.
  std::vector<std::vector<Rational>> art(static_cast<std::size_t>(rows),
                                         std::vector<Rational>(static_cast<std::size_t>(rows), Rational(0)));
  for (int i = 0; i < rows; ++i) {
    if (t.b[static_cast<std::size_t>(i)] < 0) {
      for (auto& x : t.a[static_cast<std::size_t>(i)]) x = -x;
      t.b[static_cast<std::size_t>(i)] = -t.b[static_cast<std::size_t>(i)];
      for (auto& x : art[static_cast<std::size_t>(i)]) x = -x;  // no-op, zeros
    }
    art[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    t.basis[static_cast<std::size_t>(i)] = t.cols + i;
  }

  auto reduced_costs = [&](const std::vector<Rational>& cost_struct,
                           const std::vector<Rational>& cost_art,
                           std::vector<Rational>& rc_struct, std::vector<Rational>& rc_art) {
    // rc_j = c_j - sum_i c_basis(i) * tableau(i, j)
    rc_struct = cost_struct;
    rc_art = cost_art;
    for (int i = 0; i < rows; ++i) {
      int bi = t.basis[static_cast<std::size_t>(i)];
      Rational cb = bi < t.cols ? cost_struct[static_cast<std::size_t>(bi)]
                                : cost_art[static_cast<std::size_t>(bi - t.cols)];
      if (cb == 0) continue;
      for (int j = 0; j < t.cols; ++j)
        rc_struct[static_cast<std::size_t>(j)] -= cb * t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int j = 0; j < rows; ++j)
        rc_art[static_cast<std::size_t>(j)] -= cb * art[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  };

  auto run_simplex = [&](const std::vector<Rational>& cost_struct,
                         const std::vector<Rational>& cost_art, bool allow_art_entering) {
    while (true) {
      std::vector<Rational> rc_struct, rc_art;
      reduced_costs(cost_struct, cost_art, rc_struct, rc_art);
      // Bland: smallest-index entering column with negative reduced cost.
      int enter = -1;
      for (int j = 0; j < t.cols && enter < 0; ++j)
        if (rc_struct[static_cast<std::size_t>(j)] < 0) enter = j;
      if (enter < 0 && allow_art_entering) {
        for (int j = 0; j < rows && enter < 0; ++j)
          if (rc_art[static_cast<std::size_t>(j)] < 0) enter = t.cols + j;
      }
      if (enter < 0) return true;  // optimal
      // Ratio test, Bland ties by smallest basis index.
      int leave = -1;
      Rational best;
      for (int i = 0; i < rows; ++i) {
        Rational aij = enter < t.cols
                           ? t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)]
                           : art[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter - t.cols)];
        if (aij <= 0) continue;
        Rational ratio = t.b[static_cast<std::size_t>(i)] / aij;
        if (leave < 0 || ratio < best ||
            (ratio == best && t.basis[static_cast<std::size_t>(i)] < t.basis[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      t.pivot(leave, enter, art);
    }
  };

  Solution sol;

  // Phase 1: minimize sum of artificials.
  {
    std::vector<Rational> cost_struct(static_cast<std::size_t>(t.cols), Rational(0));
    std::vector<Rational> cost_art(static_cast<std::size_t>(rows), Rational(1));
    bool done = run_simplex(cost_struct, cost_art, true);
    if (!done) fail("LpInternal", "phase 1 unbounded");
    Rational phase1 = 0;
    for (int i = 0; i < rows; ++i) {
      if (t.basis[static_cast<std::size_t>(i)] >= t.cols) phase1 += t.b[static_cast<std::size_t>(i)];
    }
    if (phase1 > 0) {
      sol.status = Status::Infeasible;
      // Farkas-style certificate: rows whose dual weight y_j = 1 - rc_art_j
      // is nonzero in the terminal phase-1 dictionary.
      std::vector<Rational> rc_struct, rc_art;
      reduced_costs(cost_struct, cost_art, rc_struct, rc_art);
      for (int j = 0; j < rows; ++j) {
        if (Rational(1) - rc_art[static_cast<std::size_t>(j)] != 0) sol.infeasible_rows.push_back(j);
      }
      return sol;
    }
    // Drive leftover degenerate artificials out of the basis where possible.
    for (int i = 0; i < rows; ++i) {
      if (t.basis[static_cast<std::size_t>(i)] < t.cols) continue;
      int enter = -1;
      for (int j = 0; j < t.cols && enter < 0; ++j)
        if (t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) enter = j;
      if (enter >= 0) t.pivot(i, enter, art);
      // A fully zero row is a redundant constraint; its artificial stays
      // basic at value zero, which is harmless for phase 2.
    }
  }

  // Phase 2.
  {
    std::vector<Rational> cost_struct(static_cast<std::size_t>(t.cols), Rational(0));
    for (int v = 0; v < num_vars_; ++v) {
      int c = col_of[static_cast<std::size_t>(v)];
      if (c >= 0) cost_struct[static_cast<std::size_t>(c)] = objective_[static_cast<std::size_t>(v)];
    }
    std::vector<Rational> cost_art(static_cast<std::size_t>(rows), Rational(0));
    bool done = run_simplex(cost_struct, cost_art, false);
    if (!done) fail("LpUnbounded", "objective unbounded below");
  }

  sol.status = Status::Optimal;
  sol.values.assign(static_cast<std::size_t>(num_vars_), Rational(0));
  std::vector<Rational> y(static_cast<std::size_t>(t.cols), Rational(0));
  for (int i = 0; i < rows; ++i) {
    if (t.basis[static_cast<std::size_t>(i)] < t.cols)
      y[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(i)])] = t.b[static_cast<std::size_t>(i)];
  }
  sol.objective = 0;
  for (int v = 0; v < num_vars_; ++v) {
    int c = col_of[static_cast<std::size_t>(v)];
    Rational x = shift_of(v) + (c >= 0 ? y[static_cast<std::size_t>(c)] : Rational(0));
    sol.values[static_cast<std::size_t>(v)] = x;
    sol.objective += objective_[static_cast<std::size_t>(v)] * x;
  }
  return sol;
}

Integer common_denominator(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) {
    Integer d = v.get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  }
  return l;
}

}  // namespace octi
