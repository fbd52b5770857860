#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace octi {

using Rational = mpq_class;
using Integer = mpz_class;

// Exact-rational LP in the form
//   minimize c.x  subject to  A x = b,  x_j >= lower_j  (or x_j fixed),
// solved by two-phase primal simplex with Bland's rule. Sizes here are desk
// scale; a dense tableau is plenty.
class LinearProgram {
 public:
  explicit LinearProgram(int num_vars);

  void set_lower_bound(int var, const Rational& lb);
  void fix_variable(int var, const Rational& value);
  void set_objective(int var, const Rational& coeff);
  // Adds the constraint sum coeff_i * x_i = rhs.
  int add_constraint(const std::vector<std::pair<int, Rational>>& terms, const Rational& rhs);

  enum class Status { Optimal, Infeasible };

  struct Solution {
    Status status = Status::Infeasible;
    std::vector<Rational> values;   // per variable, only for Optimal
    Rational objective;             // only for Optimal
    std::vector<int> infeasible_rows;  // constraint ids with nonzero Farkas weight
  };

  Solution solve() const;

 private:
  int num_vars_;
  std::vector<Rational> lower_;
  std::vector<std::optional<Rational>> fixed_;
  std::vector<Rational> objective_;
  std::vector<std::vector<std::pair<int, Rational>>> rows_;
  std::vector<Rational> rhs_;
};

// Least common multiple of the denominators of `values`.
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace octi
