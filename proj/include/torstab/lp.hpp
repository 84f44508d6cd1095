#pragma once

// Exact linear feasibility by Fourier-Motzkin elimination, used for the
// effective threshold: the smallest t making t*L + D effective.

#include "torstab/polytope.hpp"
#include "torstab/rational.hpp"

#include <set>
#include <vector>

namespace torstab {

struct LinearConstraint {
  RatVec coeffs;  // <coeffs, x> >= rhs
  Rat rhs;
};

enum class ThresholdKind { Finite, MinusInfinity, Infeasible };

struct Threshold {
  ThresholdKind kind;
  Rat value;  // meaningful iff kind == Finite
};

namespace detail {

inline std::vector<LinearConstraint> eliminate_variable(
    const std::vector<LinearConstraint>& rows, size_t var) {
  std::vector<const LinearConstraint*> lower, upper;
  std::vector<LinearConstraint> out;
  for (const auto& r : rows) {
    const Rat& c = r.coeffs[var];
    if (c > 0)
      lower.push_back(&r);
    else if (c < 0)
      upper.push_back(&r);
    else
      out.push_back(r);
  }
  std::set<std::pair<RatVec, Rat>> seen;
  for (const auto* lo : lower)
    for (const auto* up : upper) {
      // lo: a x_var >= ..., up: -b x_var >= ... with a, b > 0.
      Rat a = lo->coeffs[var], b = -up->coeffs[var];
      LinearConstraint c;
      c.coeffs.assign(rows[0].coeffs.size(), Rat(0));
      for (size_t i = 0; i < c.coeffs.size(); ++i)
        c.coeffs[i] = b * lo->coeffs[i] + a * up->coeffs[i];
      c.rhs = b * lo->rhs + a * up->rhs;
      c.coeffs[var] = 0;
      if (seen.insert({c.coeffs, c.rhs}).second) out.push_back(std::move(c));
    }
  return out;
}

}  // namespace detail

// Minimizes the last variable over { x : all constraints hold }, exactly.
inline Threshold minimize_last_variable(std::vector<LinearConstraint> rows, size_t nvars) {
  if (rows.empty()) return {ThresholdKind::MinusInfinity, Rat(0)};
  for (size_t var = 0; var + 1 < nvars; ++var) rows = detail::eliminate_variable(rows, var);
  bool has_lower = false;
  Rat best_lower = 0, best_upper = 0;
  bool has_upper = false;
  for (const auto& r : rows) {
    const Rat& c = r.coeffs[nvars - 1];
    if (c > 0) {
      Rat b = r.rhs / c;
      if (!has_lower || b > best_lower) best_lower = b;
      has_lower = true;
    } else if (c < 0) {
      Rat b = r.rhs / c;
      if (!has_upper || b < best_upper) best_upper = b;
      has_upper = true;
    } else if (r.rhs > 0) {
      return {ThresholdKind::Infeasible, Rat(0)};
    }
  }
  if (has_upper && has_lower && best_upper < best_lower)
    return {ThresholdKind::Infeasible, Rat(0)};
  if (!has_lower) return {ThresholdKind::MinusInfinity, Rat(0)};
  return {ThresholdKind::Finite, best_lower};
}

// t_min = inf { t : P_{tL + D} nonempty }, via exact elimination over (m, t).
inline Threshold effective_threshold(const Fan& fan, const ToricDivisor& l,
                                     const ToricDivisor& d) {
  if (!fan.validated) throw InputError("fan must be validated first");
  size_t n = fan.dim;
  if (n > 4) throw InputError("effective threshold limited to dimension <= 4");
  std::vector<LinearConstraint> rows;
  for (size_t i = 0; i < fan.rays.size(); ++i) {
    // <m, u_rho> + t a_rho >= -d_rho
    LinearConstraint c;
    c.coeffs = to_rational(fan.rays[i]);
    c.coeffs.push_back(l.coeffs[i]);
    c.rhs = -d.coeffs[i];
    rows.push_back(std::move(c));
  }
  return minimize_last_variable(std::move(rows), n + 1);
}

}  // namespace torstab
