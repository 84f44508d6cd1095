#pragma once

// Stability invariants of a polarised toric variety: slope, pseudoeffective
// threshold, S and j norms, the beta invariant along two independent routes,
// the toric Futaki pairing, the toric delta invariant with its brute-force
// verifier, destabilizer search, and the delta-based sufficiency criterion.

#include "torstab/fan.hpp"
#include "torstab/lp.hpp"
#include "torstab/polytope.hpp"
#include "torstab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torstab {

inline Rat factorial(size_t n) {
  Rat f = 1;
  for (size_t i = 2; i <= n; ++i) f *= Rat(int(i));
  return f;
}

// A polarisation with its polytope and the measures every invariant reuses.
struct Geometry {
  Fan fan;
  ToricDivisor l;
  LatticePolytope p;
  size_t n;
  Rat vol_m;        // lattice volume of P
  RatVec b_p;       // barycentre of P
  Rat vol_dp;       // lattice boundary measure
  RatVec b_dp;      // boundary barycentre
  Rat vol() const { return factorial(n) * vol_m; }  // L^n
  Rat mu() const { return vol_dp / (Rat(int(n)) * vol_m); }
};

inline Geometry make_geometry(const Fan& fan, const ToricDivisor& l) {
  Geometry g;
  g.fan = fan;
  g.l = l;
  g.p = polytope_of(fan, l);
  if (g.p.empty()) throw MathError("polarization has an empty polytope");
  if (!is_full_dimensional(g.p)) throw MathError("not full-dimensional");
  if (!g.p.ample) throw MathError("polarization is not ample");
  g.n = fan.dim;
  Measure m = measure(g.p);
  g.vol_m = m.volume;
  g.b_p = m.centroid;
  BoundaryMeasure bm = boundary_measure(g.p);
  g.vol_dp = bm.total;
  g.b_dp = bm.centroid;
  return g;
}

inline Rat slope_mu(const Geometry& g) { return g.mu(); }
inline Rat slope_mu(const Fan& fan, const ToricDivisor& l) { return make_geometry(fan, l).mu(); }

struct Norms {
  Rat tau;
  Rat s;
  Rat j;      // L^n (tau - S)
  Rat j_hat;  // j / n!
};

inline Norms tau_s_j(const Geometry& g, const IntVec& nu) {
  if (!is_primitive(nu)) throw InputError("valuation direction must be primitive");
  auto [lo, hi] = linear_range(g.p, nu);
  Norms out;
  out.tau = hi - lo;
  out.s = integrate(piecewise_volume(g.p, nu)) / g.vol_m;
  out.j_hat = g.vol_m * (out.tau - out.s);
  out.j = factorial(g.n) * out.j_hat;
  return out;
}

inline Norms tau_s_j(const Fan& fan, const ToricDivisor& l, const IntVec& nu) {
  return tau_s_j(make_geometry(fan, l), nu);
}

// Normalized beta invariant from the volume and boundary profiles; the
// unnormalized value is n! times this.
inline Rat beta_integral(const Geometry& g, const IntVec& nu) {
  auto val = minimal_cone_containing(g.fan, nu);
  const Rat& a = val.log_discrepancy;
  PiecewisePolynomial vol = piecewise_volume(g.p, nu);
  BoundaryProfile bd = piecewise_boundary(g.p, nu);
  return a * g.vol_m + (g.vol_dp / g.vol_m) * integrate(vol) - integrate(bd.sigma_only) -
         a * integrate(bd.slice_facet);
}

inline Rat beta_integral(const Fan& fan, const ToricDivisor& l, const IntVec& nu) {
  return beta_integral(make_geometry(fan, l), nu);
}

// Same invariant from the two barycentres alone; the log discrepancy cancels
// against the slice term of the pulled-back canonical divisor.
inline Rat beta_barycentre(const Geometry& g, const IntVec& nu) {
  if (!is_primitive(nu)) throw InputError("valuation direction must be primitive");
  return g.vol_dp * (dot(g.b_p, nu) - dot(g.b_dp, nu));
}

inline Rat beta_barycentre(const Fan& fan, const ToricDivisor& l, const IntVec& nu) {
  return beta_barycentre(make_geometry(fan, l), nu);
}

// Printed-formula variant carrying the extra (A - 1) Vol_M term; exposed for
// comparison in verbose reports, not used by any other computation.
inline Rat beta_barycentre_with_discrepancy_term(const Geometry& g, const IntVec& nu) {
  auto val = minimal_cone_containing(g.fan, nu);
  return (val.log_discrepancy - 1) * g.vol_m + beta_barycentre(g, nu);
}

// Futaki pairing against the linear function <., u>; the affine constant of a
// general affine-linear function cancels between the two terms.
inline Rat futaki(const Geometry& g, const IntVec& u) {
  Rat v = 0;
  for (size_t i = 0; i < g.n; ++i) v += (g.b_dp[i] - g.b_p[i]) * Rat(u[i]);
  return v;
}

inline Rat futaki(const Fan& fan, const ToricDivisor& l, const IntVec& u) {
  return futaki(make_geometry(fan, l), u);
}

inline bool futaki_vanishes(const Geometry& g) { return g.b_p == g.b_dp; }
inline bool futaki_vanishes(const Fan& fan, const ToricDivisor& l) {
  return futaki_vanishes(make_geometry(fan, l));
}

inline const char* kDeltaCaveat = "toric delta: infimum over toric valuations only";

struct DeltaResult {
  Rat delta;
  size_t minimizer_ray;
  std::string caveat = kDeltaCaveat;
};

// A(nu)/S(nu) is a ratio of cone-wise linear functions, so the infimum over
// the support is attained on the rays.
inline DeltaResult delta_toric(const Geometry& g) {
  std::optional<Rat> best;
  size_t best_ray = 0;
  for (size_t i = 0; i < g.fan.rays.size(); ++i) {
    Rat ratio = Rat(1) / tau_s_j(g, g.fan.rays[i]).s;
    if (!best || ratio < *best) {
      best = ratio;
      best_ray = i;
    }
  }
  return {*best, best_ray};
}

inline DeltaResult delta_toric(const Fan& fan, const ToricDivisor& l) {
  return delta_toric(make_geometry(fan, l));
}

namespace detail {

// Lexicographic enumeration of primitive vectors in the box |nu|_inf <= r.
template <typename Fn>
void for_each_primitive_in_box(size_t dim, long r, Fn&& fn) {
  IntVec v(dim, Int(-r));
  while (true) {
    if (!is_zero(v) && is_primitive(v)) fn(v);
    size_t i = dim;
    bool advanced = false;
    while (i-- > 0) {
      if (v[i] < r) {
        ++v[i];
        for (size_t j = i + 1; j < dim; ++j) v[j] = -r;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
}

}  // namespace detail

struct DeltaBruteResult {
  Rat delta;
  IntVec minimizer;
};

// Verification oracle: min of A(nu)/S(nu) over primitive |nu|_inf <= r, with
// S from the integral route. Ties go to the lexicographically smallest nu.
inline DeltaBruteResult delta_toric_brute(const Geometry& g, long r) {
  if (r < 1) throw InputError("radius must be at least 1");
  std::optional<Rat> best;
  IntVec arg;
  detail::for_each_primitive_in_box(g.n, r, [&](const IntVec& nu) {
    Rat a = minimal_cone_containing(g.fan, nu).log_discrepancy;
    Rat ratio = a / tau_s_j(g, nu).s;
    if (!best || ratio < *best) {
      best = ratio;
      arg = nu;
    }
  });
  return {*best, arg};
}

inline DeltaBruteResult delta_toric_brute(const Fan& fan, const ToricDivisor& l, long r) {
  return delta_toric_brute(make_geometry(fan, l), r);
}

struct DestabilizerResult {
  bool found_negative = false;
  bool all_zero = true;
  IntVec minimizer;
  Rat beta_hat;
  Rat ratio;  // beta_hat / j_hat
};

// Minimizes beta_hat(nu)/j_hat(nu) over the primitive box; reports whether any
// direction has negative beta. Ties go to the lexicographically smallest nu.
inline DestabilizerResult destabilizer_search(const Geometry& g, long r) {
  if (r < 1) throw InputError("radius must be at least 1");
  DestabilizerResult out;
  std::optional<Rat> best;
  detail::for_each_primitive_in_box(g.n, r, [&](const IntVec& nu) {
    Rat bh = beta_barycentre(g, nu);
    Rat ratio = bh / tau_s_j(g, nu).j_hat;
    if (bh < 0) out.found_negative = true;
    if (bh != 0) out.all_zero = false;
    if (!best || ratio < *best) {
      best = ratio;
      out.minimizer = nu;
      out.beta_hat = bh;
      out.ratio = ratio;
    }
  });
  // A negative direction exists exactly when the barycentres differ.
  if (out.found_negative == futaki_vanishes(g))
    throw MathError("destabilizer search disagrees with the Futaki pairing");
  return out;
}

inline DestabilizerResult destabilizer_search(const Fan& fan, const ToricDivisor& l, long r) {
  return destabilizer_search(make_geometry(fan, l), r);
}

enum class CriterionVerdict { Satisfied, Boundary, NotSatisfied };

struct CriterionReport {
  CriterionVerdict verdict;
  Rat mu;
  Rat delta;       // toric delta, a priori only an upper bound for delta(L)
  Rat gamma;       // (delta - mu)/(n+1)
  Threshold t_min;  // effectivity threshold of K_X against L
  std::string caveat = kDeltaCaveat;
};

// Sufficiency check for uniform valuative stability: requires strictly more
// effectivity room than the literal bound, since the argument spends a
// positive epsilon. Equality cases are reported as Boundary.
inline CriterionReport sufficient_criterion(const Geometry& g) {
  CriterionReport rep;
  rep.mu = g.mu();
  rep.delta = delta_toric(g).delta;
  rep.gamma = (rep.delta - rep.mu) / Rat(int(g.n) + 1);
  rep.t_min = effective_threshold(g.fan, g.l, canonical_divisor(g.fan));
  Rat bound = rep.mu + rep.gamma;
  if (rep.t_min.kind == ThresholdKind::Infeasible) {
    rep.verdict = CriterionVerdict::NotSatisfied;
  } else if (rep.t_min.kind == ThresholdKind::MinusInfinity || rep.t_min.value < bound) {
    rep.verdict = CriterionVerdict::Satisfied;
  } else if (rep.t_min.value == bound) {
    rep.verdict = CriterionVerdict::Boundary;
  } else {
    rep.verdict = CriterionVerdict::NotSatisfied;
  }
  return rep;
}

inline CriterionReport sufficient_criterion(const Fan& fan, const ToricDivisor& l) {
  return sufficient_criterion(make_geometry(fan, l));
}

struct AlphaBound {
  Rat constant;           // mu/(n+1)
  bool hypothesis_holds;  // Futaki vanishes, so the bound is asserted
};

inline AlphaBound alpha_lower_bound_constant(const Geometry& g) {
  return {g.mu() / Rat(int(g.n) + 1), futaki_vanishes(g)};
}

inline AlphaBound alpha_lower_bound_constant(const Fan& fan, const ToricDivisor& l) {
  return alpha_lower_bound_constant(make_geometry(fan, l));
}

}  // namespace torstab
