#pragma once

// Moment polytopes of toric divisors: exact H- and V-representations,
// lattice-normalized volumes and boundary measures, slicing, and the
// piecewise polynomial volume profiles along a lattice direction.

#include "torstab/fan.hpp"
#include "torstab/linalg.hpp"
#include "torstab/piecewise.hpp"
#include "torstab/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace torstab {

struct ToricDivisor {
  RatVec coeffs;  // one per fan ray, in ray order
};

inline ToricDivisor anticanonical_divisor(const Fan& fan) {
  if (!fan.validated) throw InputError("fan must be validated first");
  return ToricDivisor{RatVec(fan.rays.size(), Rat(1))};
}

inline ToricDivisor canonical_divisor(const Fan& fan) {
  if (!fan.validated) throw InputError("fan must be validated first");
  return ToricDivisor{RatVec(fan.rays.size(), Rat(-1))};
}

inline ToricDivisor scale(const ToricDivisor& d, const Rat& k) {
  ToricDivisor out = d;
  for (auto& c : out.coeffs) c *= k;
  return out;
}

struct Halfspace {
  IntVec normal;  // primitive
  Rat rhs;        // <normal, m> >= rhs
  int ray_index = -1;
  bool is_slice = false;
};

struct LatticePolytope {
  size_t dim = 0;
  std::vector<Halfspace> halfspaces;
  std::vector<RatVec> vertices;  // deduplicated, lexicographically sorted
  bool ample = false;

  bool empty() const { return vertices.empty(); }
  bool is_lattice() const {
    for (const auto& v : vertices)
      for (const auto& c : v)
        if (denominator(c) != 1) return false;
    return !vertices.empty();
  }
};

namespace detail {

inline std::vector<RatVec> enumerate_vertices(size_t dim, const std::vector<Halfspace>& hs) {
  std::set<RatVec> found;
  size_t m = hs.size();
  if (m < dim) return {};
  // All dim-subsets of the halfspaces; a vertex is a feasible solution of a
  // nonsingular tight subset.
  std::vector<size_t> comb(dim);
  for (size_t i = 0; i < dim; ++i) comb[i] = i;
  while (true) {
    RatMat a(dim, RatVec(dim));
    RatVec b(dim);
    for (size_t r = 0; r < dim; ++r) {
      for (size_t c = 0; c < dim; ++c) a[r][c] = Rat(hs[comb[r]].normal[c]);
      b[r] = hs[comb[r]].rhs;
    }
    try {
      RatVec x = solve_linear(std::move(a), std::move(b));
      bool inside = true;
      for (const auto& h : hs)
        if (dot(x, h.normal) < h.rhs) {
          inside = false;
          break;
        }
      if (inside) found.insert(std::move(x));
    } catch (const MathError&) {
      // singular subset, no vertex here
    }
    size_t i = dim;
    bool advanced = false;
    while (i-- > 0) {
      if (comb[i] < m - dim + i) {
        ++comb[i];
        for (size_t j = i + 1; j < dim; ++j) comb[j] = comb[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return {found.begin(), found.end()};
}

}  // namespace detail

// Builds P_D = { m : <m, u_rho> >= -a_rho } with exact vertices. The ample
// flag records whether the per-cone vertex map is injective and strict away
// from its own cone, i.e. the normal fan of P is exactly the fan.
inline LatticePolytope polytope_of(const Fan& fan, const ToricDivisor& d) {
  if (!fan.validated) throw InputError("fan must be validated first");
  if (d.coeffs.size() != fan.rays.size())
    throw InputError("divisor must have one coefficient per ray");
  LatticePolytope p;
  p.dim = fan.dim;
  for (size_t i = 0; i < fan.rays.size(); ++i)
    p.halfspaces.push_back({fan.rays[i], -d.coeffs[i], int(i), false});
  p.vertices = detail::enumerate_vertices(p.dim, p.halfspaces);

  p.ample = true;
  std::set<RatVec> cone_vertices;
  for (const auto& cone : fan.cones) {
    RatMat a(p.dim, RatVec(p.dim));
    RatVec b(p.dim);
    for (size_t r = 0; r < p.dim; ++r) {
      for (size_t c = 0; c < p.dim; ++c) a[r][c] = Rat(fan.rays[cone[r]][c]);
      b[r] = -d.coeffs[cone[r]];
    }
    RatVec m = solve_linear(std::move(a), std::move(b));
    if (!cone_vertices.insert(m).second) {
      p.ample = false;
      break;
    }
    for (const auto& h : p.halfspaces) {
      if (std::find(cone.begin(), cone.end(), size_t(h.ray_index)) != cone.end()) continue;
      if (dot(m, h.normal) <= h.rhs) {
        p.ample = false;
        break;
      }
    }
    if (!p.ample) break;
  }
  return p;
}

struct Measure {
  Rat volume;
  RatVec centroid;
};

namespace detail {

struct GeomPoly {
  size_t dim;
  std::vector<std::pair<IntVec, Rat>> hs;  // <normal, y> >= rhs, normal primitive
  std::vector<RatVec> verts;
};

inline std::vector<size_t> active_vertices(const GeomPoly& g, const std::pair<IntVec, Rat>& h) {
  std::vector<size_t> act;
  for (size_t i = 0; i < g.verts.size(); ++i)
    if (dot(g.verts[i], h.first) == h.second) act.push_back(i);
  return act;
}

// Maps the facet on hyperplane <.,u> = c into lattice coordinates of u-perp,
// returning the induced polytope plus the data to map centroids back.
struct FacetChart {
  GeomPoly facet;
  RatVec base;                 // a point on the hyperplane
  std::vector<IntVec> basis;   // rows: lattice basis of u-perp
};

inline FacetChart facet_chart(const GeomPoly& g, size_t hs_index,
                              const std::vector<size_t>& active) {
  const auto& [u, c] = g.hs[hs_index];
  FacetChart chart;
  chart.base = g.verts[active[0]];
  auto w = unimodular_completion(u);
  chart.basis.assign(w.begin() + 1, w.end());
  size_t d = g.dim;

  // Coordinates: p = base + sum y_i basis[i]; solve V y = p - base where the
  // columns of V are w_1..w_d (the first coordinate is forced to zero).
  RatMat vmat(d, RatVec(d));
  for (size_t col = 0; col < d; ++col)
    for (size_t row = 0; row < d; ++row) vmat[row][col] = Rat(w[col][row]);
  chart.facet.dim = d - 1;
  for (size_t vi : active) {
    RatVec rhsv(d);
    for (size_t r = 0; r < d; ++r) rhsv[r] = g.verts[vi][r] - chart.base[r];
    RatVec y = solve_linear(vmat, rhsv);
    chart.facet.verts.push_back(RatVec(y.begin() + 1, y.end()));
  }
  for (size_t j = 0; j < g.hs.size(); ++j) {
    if (j == hs_index) continue;
    const auto& [nrm, rhs] = g.hs[j];
    IntVec tn(d - 1);
    bool zero = true;
    for (size_t i = 0; i < d - 1; ++i) {
      tn[i] = dot(chart.basis[i], nrm);
      if (tn[i] != 0) zero = false;
    }
    if (zero) continue;
    Rat trhs = rhs - dot(chart.base, nrm);
    auto [prim, gfac] = primitivize(tn);
    chart.facet.hs.push_back({prim, trhs / Rat(gfac)});
  }
  return chart;
}

inline RatVec chart_point_back(const FacetChart& chart, const RatVec& y) {
  RatVec p = chart.base;
  for (size_t i = 0; i < chart.basis.size(); ++i)
    for (size_t c = 0; c < p.size(); ++c) p[c] += y[i] * Rat(chart.basis[i][c]);
  return p;
}

// Lattice volume and centroid of a full-dimensional GeomPoly, by coning the
// facets away from a fixed apex vertex.
inline Measure measure_impl(const GeomPoly& g) {
  if (g.dim == 0) return {Rat(1), {}};
  if (g.verts.empty()) throw MathError("measure of an empty polytope");
  const RatVec& apex = g.verts[0];
  Rat vol = 0;
  RatVec weighted(g.dim, Rat(0));
  std::set<std::pair<IntVec, Rat>> seen;
  for (size_t hi = 0; hi < g.hs.size(); ++hi) {
    if (!seen.insert(g.hs[hi]).second) continue;
    const auto& [u, c] = g.hs[hi];
    Rat apex_gap = dot(apex, u) - c;
    if (apex_gap == 0) continue;  // cone over this facet is flat
    auto act = active_vertices(g, g.hs[hi]);
    if (act.empty()) continue;
    std::vector<RatVec> pts;
    for (size_t vi : act) pts.push_back(g.verts[vi]);
    if (affine_dimension(pts) + 1 != g.dim) continue;  // not a genuine facet
    auto chart = facet_chart(g, hi, act);
    Measure fm = measure_impl(chart.facet);
    Rat cone_vol = apex_gap * fm.volume / Rat(int(g.dim));
    RatVec fc = chart_point_back(chart, fm.centroid);
    // centroid of the cone: apex + dim/(dim+1) (facet centroid - apex)
    Rat t = Rat(int(g.dim)) / Rat(int(g.dim) + 1);
    for (size_t cidx = 0; cidx < g.dim; ++cidx) {
      Rat cc = apex[cidx] + t * (fc[cidx] - apex[cidx]);
      weighted[cidx] += cone_vol * cc;
    }
    vol += cone_vol;
  }
  if (vol == 0) throw MathError("measure of a lower-dimensional polytope");
  RatVec centroid(g.dim);
  for (size_t i = 0; i < g.dim; ++i) centroid[i] = weighted[i] / vol;
  return {vol, centroid};
}

inline GeomPoly to_geom(const LatticePolytope& p) {
  GeomPoly g;
  g.dim = p.dim;
  g.verts = p.vertices;
  for (const auto& h : p.halfspaces) g.hs.push_back({h.normal, h.rhs});
  return g;
}

}  // namespace detail

inline bool is_full_dimensional(const LatticePolytope& p) {
  return !p.vertices.empty() && affine_dimension(p.vertices) == p.dim;
}

// Lattice volume (unit cell has volume 1) and barycentre.
inline Measure measure(const LatticePolytope& p) {
  if (p.empty()) throw MathError("measure of an empty polytope");
  if (!is_full_dimensional(p)) throw MathError("not full-dimensional");
  return detail::measure_impl(detail::to_geom(p));
}

// Lattice (dim-1)-measure and centroid of the facet cut out by one halfspace;
// nullopt when that face has dimension < dim-1 (it carries no measure).
inline std::optional<Measure> facet_measure(const LatticePolytope& p, size_t hs_index) {
  auto g = detail::to_geom(p);
  auto act = detail::active_vertices(g, g.hs[hs_index]);
  if (act.empty()) return std::nullopt;
  std::vector<RatVec> pts;
  for (size_t vi : act) pts.push_back(g.verts[vi]);
  if (affine_dimension(pts) + 1 != p.dim) return std::nullopt;
  auto chart = detail::facet_chart(g, hs_index, act);
  Measure fm = detail::measure_impl(chart.facet);
  return Measure{fm.volume, detail::chart_point_back(chart, fm.centroid)};
}

struct BoundaryMeasure {
  Rat total;
  RatVec centroid;
  std::vector<std::pair<int, Rat>> per_facet;  // (ray index, facet measure)
};

// Sum of lattice facet measures over the fan rays, with the volume-weighted
// boundary barycentre. Faces of dimension < dim-1 contribute zero.
inline BoundaryMeasure boundary_measure(const LatticePolytope& p) {
  if (p.empty()) throw MathError("boundary measure of an empty polytope");
  if (!is_full_dimensional(p))
    throw MathError("boundary measure of a lower-dimensional polytope is not supported");
  BoundaryMeasure out;
  out.total = 0;
  out.centroid.assign(p.dim, Rat(0));
  for (size_t i = 0; i < p.halfspaces.size(); ++i) {
    if (p.halfspaces[i].ray_index < 0) continue;
    auto fm = facet_measure(p, i);
    Rat v = fm ? fm->volume : Rat(0);
    out.per_facet.push_back({p.halfspaces[i].ray_index, v});
    if (!fm) continue;
    out.total += v;
    for (size_t c = 0; c < p.dim; ++c) out.centroid[c] += v * fm->centroid[c];
  }
  if (out.total == 0) throw MathError("polytope has no codimension-one facets");
  for (auto& c : out.centroid) c /= out.total;
  return out;
}

// Exact min and max of <., u> over the polytope.
inline std::pair<Rat, Rat> linear_range(const LatticePolytope& p, const IntVec& u) {
  if (p.empty()) throw MathError("linear range over an empty polytope");
  Rat lo = dot(p.vertices[0], u), hi = lo;
  for (const auto& v : p.vertices) {
    Rat t = dot(v, u);
    if (t < lo) lo = t;
    if (t > hi) hi = t;
  }
  return {lo, hi};
}

// P cut to { <m,u> >= min + x }. The cut constraint is tagged as the slice.
inline LatticePolytope truncate(const LatticePolytope& p, const IntVec& u, const Rat& x) {
  auto [lo, hi] = linear_range(p, u);
  if (x < 0 || x > hi - lo) throw MathError("slice parameter outside [0, tau]");
  LatticePolytope out;
  out.dim = p.dim;
  out.halfspaces = p.halfspaces;
  Rat rhs = lo + x;
  bool duplicate = false;
  for (const auto& h : out.halfspaces)
    if (h.normal == u && h.rhs == rhs) duplicate = true;
  if (!duplicate) out.halfspaces.push_back({u, rhs, -1, true});
  out.vertices = detail::enumerate_vertices(out.dim, out.halfspaces);
  return out;
}

namespace detail {

inline RatVec slice_breakpoints(const LatticePolytope& p, const IntVec& u) {
  auto [lo, hi] = linear_range(p, u);
  std::set<Rat> cuts;
  for (const auto& v : p.vertices) cuts.insert(dot(v, u) - lo);
  if (cuts.size() < 2) throw MathError("direction is constant on the polytope");
  return {cuts.begin(), cuts.end()};
}

// Fits the exact polynomial of degree <= max_deg on each piece by sampling at
// interior rational points, with one extra sample as a degree certificate.
template <typename Eval>
PiecewisePolynomial fit_piecewise(const RatVec& cuts, size_t max_deg, Eval&& value_at) {
  PiecewisePolynomial pp;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rat &a = cuts[i], &b = cuts[i + 1];
    size_t samples = max_deg + 2;
    RatVec xs, ys;
    for (size_t j = 0; j < samples; ++j) {
      Rat x = a + (b - a) * Rat(int(j) + 1) / Rat(int(samples) + 1);
      xs.push_back(x);
      ys.push_back(value_at(x));
    }
    Polynomial poly =
        interpolate(RatVec(xs.begin(), xs.end() - 1), RatVec(ys.begin(), ys.end() - 1));
    if (poly.eval(xs.back()) != ys.back())
      throw MathError("piece is not polynomial of the expected degree");
    pp.pieces.push_back({a, b, std::move(poly)});
  }
  if (!pp.is_continuous()) throw MathError("piecewise fit is discontinuous");
  return pp;
}

}  // namespace detail

// x -> Vol_M(P cut at x) on [0, tau]; polynomial of degree <= dim per piece.
inline PiecewisePolynomial piecewise_volume(const LatticePolytope& p, const IntVec& u) {
  if (!is_full_dimensional(p)) throw MathError("not full-dimensional");
  if (!is_primitive(u)) throw InputError("direction must be primitive");
  auto cuts = detail::slice_breakpoints(p, u);
  return detail::fit_piecewise(cuts, p.dim, [&](const Rat& x) {
    return measure(truncate(p, u, x)).volume;
  });
}

struct BoundaryProfile {
  PiecewisePolynomial sigma_only;   // facets coming from the fan rays
  PiecewisePolynomial slice_facet;  // the moving cut facet, measured with its own lattice form
};

// Boundary measures of the cut polytopes, split into the contribution of the
// original ray facets and the slice facet.
inline BoundaryProfile piecewise_boundary(const LatticePolytope& p, const IntVec& u) {
  if (!is_full_dimensional(p)) throw MathError("not full-dimensional");
  if (!is_primitive(u)) throw InputError("direction must be primitive");
  for (const auto& h : p.halfspaces)
    if (h.is_slice) throw InputError("boundary profile of an already-sliced polytope");
  auto cuts = detail::slice_breakpoints(p, u);
  size_t deg = p.dim == 0 ? 0 : p.dim - 1;
  BoundaryProfile out;
  auto facet_sum = [&](const LatticePolytope& px, bool want_slice) {
    Rat total = 0;
    for (size_t i = 0; i < px.halfspaces.size(); ++i) {
      bool slice = px.halfspaces[i].is_slice;
      if (slice != want_slice) continue;
      if (!want_slice && px.halfspaces[i].ray_index < 0) continue;
      auto fm = facet_measure(px, i);
      if (fm) total += fm->volume;
    }
    return total;
  };
  out.sigma_only = detail::fit_piecewise(cuts, deg, [&](const Rat& x) {
    return facet_sum(truncate(p, u, x), false);
  });
  out.slice_facet = detail::fit_piecewise(cuts, deg, [&](const Rat& x) {
    return facet_sum(truncate(p, u, x), true);
  });
  return out;
}

}  // namespace torstab
