#pragma once

// Complete simplicial fans, minimal cones of lattice directions, log
// discrepancies, and star subdivisions.

#include "torstab/linalg.hpp"
#include "torstab/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace torstab {

struct Fan {
  size_t dim = 0;
  std::vector<IntVec> rays;                 // primitive generators
  std::vector<std::vector<size_t>> cones;   // maximal cones as ray index sets, size == dim
  bool validated = false;
};

// A primitive direction resolved against the fan: its minimal cone, the exact
// positive coefficients against that cone's generators, and A = sum of them.
struct ValuationData {
  IntVec u_nu;
  std::vector<size_t> minimal_cone;  // ray indices
  RatVec coefficients;               // positive, aligned with minimal_cone
  Rat log_discrepancy;
  bool is_ray = false;
  size_t ray_index = 0;  // meaningful iff is_ray
};

namespace detail {

inline std::vector<IntVec> cone_rays(const Fan& fan, const std::vector<size_t>& cone) {
  std::vector<IntVec> out;
  out.reserve(cone.size());
  for (size_t idx : cone) out.push_back(fan.rays[idx]);
  return out;
}

// Barycentric coordinates of nu against the cone generators, or nullopt if nu
// is outside the (closed) cone.
inline std::optional<RatVec> cone_coordinates(const Fan& fan, const std::vector<size_t>& cone,
                                              const IntVec& nu) {
  size_t n = fan.dim;
  RatMat a(n, RatVec(n));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) a[i][j] = Rat(fan.rays[cone[j]][i]);
  RatVec c;
  try {
    c = solve_linear(std::move(a), to_rational(nu));
  } catch (const MathError&) {
    return std::nullopt;  // cannot happen on a validated fan
  }
  for (const Rat& x : c)
    if (x < 0) return std::nullopt;
  return c;
}

}  // namespace detail

// Checks primitivity of rays, simpliciality, and completeness (every interior
// facet of a maximal cone shared by exactly one other cone, on the opposite
// side of its hyperplane). Throws InputError with a diagnostic otherwise.
inline Fan validate(Fan fan) {
  size_t n = fan.dim;
  if (n == 0) throw InputError("fan dimension must be positive");
  for (size_t i = 0; i < fan.rays.size(); ++i) {
    if (fan.rays[i].size() != n)
      throw InputError("ray " + std::to_string(i) + " has wrong dimension");
    if (!is_primitive(fan.rays[i]))
      throw InputError("non-primitive ray " + std::to_string(i));
    for (size_t j = 0; j < i; ++j)
      if (fan.rays[i] == fan.rays[j])
        throw InputError("duplicate ray " + std::to_string(i));
  }
  if (fan.cones.empty()) throw InputError("fan has no maximal cones");
  std::set<std::vector<size_t>> seen;
  for (auto& cone : fan.cones) {
    std::sort(cone.begin(), cone.end());
    if (cone.size() != n)
      throw InputError("maximal cone must have exactly " + std::to_string(n) + " rays");
    for (size_t idx : cone)
      if (idx >= fan.rays.size())
        throw InputError("cone refers to missing ray " + std::to_string(idx));
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw InputError("repeated ray inside a maximal cone");
    if (!seen.insert(cone).second) throw InputError("duplicate maximal cone");
    if (determinant_of_int_rows(detail::cone_rays(fan, cone)) == 0)
      throw InputError("degenerate cone " + to_string(IntVec(cone.begin(), cone.end())));
  }

  if (n == 1) {
    // The only complete fan on a line: both half-lines.
    bool plus = false, minus = false;
    for (const auto& r : fan.rays) (r[0] > 0 ? plus : minus) = true;
    if (!(plus && minus && fan.rays.size() == 2 && fan.cones.size() == 2))
      throw InputError("incomplete fan");
    fan.validated = true;
    return fan;
  }

  // Facet pairing: drop one ray from each maximal cone; every such facet must
  // occur in exactly two cones whose extra rays lie strictly on opposite
  // sides of the facet hyperplane.
  std::map<std::vector<size_t>, std::vector<size_t>> facets;  // facet -> extra rays
  for (const auto& cone : fan.cones) {
    for (size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<size_t> facet;
      for (size_t i = 0; i < cone.size(); ++i)
        if (i != drop) facet.push_back(cone[i]);
      facets[facet].push_back(cone[drop]);
    }
  }
  std::map<std::vector<size_t>, std::vector<size_t>> facet_cones;  // facet -> cone ids
  for (size_t ci = 0; ci < fan.cones.size(); ++ci) {
    const auto& cone = fan.cones[ci];
    for (size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<size_t> facet;
      for (size_t i = 0; i < cone.size(); ++i)
        if (i != drop) facet.push_back(cone[i]);
      facet_cones[facet].push_back(ci);
    }
  }
  for (const auto& [facet, extras] : facets) {
    if (extras.size() == 1) throw InputError("incomplete fan: facet with a single cone");
    if (extras.size() > 2) throw InputError("overlapping cones: facet shared more than twice");
    // Normal of the facet hyperplane via a rank-(n-1) kernel vector: solve for
    // w with <w, u_i> = 0 for facet rays and <w, extra_0> = 1.
    RatMat a(n, RatVec(n));
    RatVec b(n, Rat(0));
    for (size_t r = 0; r + 1 < n; ++r)
      for (size_t c = 0; c < n; ++c) a[r][c] = Rat(fan.rays[facet[r]][c]);
    for (size_t c = 0; c < n; ++c) a[n - 1][c] = Rat(fan.rays[extras[0]][c]);
    b[n - 1] = 1;
    RatVec w;
    try {
      w = solve_linear(std::move(a), std::move(b));
    } catch (const MathError&) {
      throw InputError("overlapping cones: facet hyperplane degenerates");
    }
    if (dot(w, to_rational(fan.rays[extras[1]])) >= 0)
      throw InputError("overlapping cones: two cones on the same side of a facet");
  }
  // The facet adjacency graph must be connected, otherwise the cones split
  // into several closed families that cannot tile N_R together.
  {
    std::vector<char> seen_cone(fan.cones.size(), 0);
    std::vector<size_t> stack{0};
    seen_cone[0] = 1;
    while (!stack.empty()) {
      size_t ci = stack.back();
      stack.pop_back();
      for (const auto& [facet, ids] : facet_cones) {
        if (std::find(ids.begin(), ids.end(), ci) == ids.end()) continue;
        for (size_t other : ids)
          if (!seen_cone[other]) {
            seen_cone[other] = 1;
            stack.push_back(other);
          }
      }
    }
    if (std::find(seen_cone.begin(), seen_cone.end(), 0) != seen_cone.end())
      throw InputError("overlapping cones: fan support is disconnected");
  }
  fan.validated = true;
  return fan;
}

inline Fan make_fan(size_t dim, std::vector<IntVec> rays, std::vector<std::vector<size_t>> cones) {
  Fan f;
  f.dim = dim;
  f.rays = std::move(rays);
  f.cones = std::move(cones);
  return validate(std::move(f));
}

// Finds the cone of minimal dimension containing nu and the exact positive
// coefficients of nu against its generators.
inline ValuationData minimal_cone_containing(const Fan& fan, const IntVec& nu) {
  if (!fan.validated) throw InputError("fan must be validated first");
  if (nu.size() != fan.dim) throw InputError("direction has wrong dimension");
  if (is_zero(nu)) throw MathError("zero vector has no direction");
  if (!is_primitive(nu)) throw InputError("direction must be primitive");
  for (const auto& cone : fan.cones) {
    auto coords = detail::cone_coordinates(fan, cone, nu);
    if (!coords) continue;
    ValuationData v;
    v.u_nu = nu;
    for (size_t i = 0; i < cone.size(); ++i) {
      if ((*coords)[i] == 0) continue;  // nu sits on the face without this ray
      v.minimal_cone.push_back(cone[i]);
      v.coefficients.push_back((*coords)[i]);
      v.log_discrepancy += (*coords)[i];
    }
    if (v.minimal_cone.size() == 1 && v.coefficients[0] == 1) {
      v.is_ray = true;
      v.ray_index = v.minimal_cone[0];
    }
    return v;
  }
  throw MathError("direction lies outside the fan support (fan not complete?)");
}

// Refines the fan at a new primitive ray: each maximal cone containing nu is
// split into the cones spanned by nu and the facets not containing nu.
inline Fan star_subdivision(const Fan& fan, const IntVec& nu) {
  if (!fan.validated) throw InputError("fan must be validated first");
  auto val = minimal_cone_containing(fan, nu);
  if (val.is_ray) throw MathError("already a ray; subdivision is identity");
  Fan out;
  out.dim = fan.dim;
  out.rays = fan.rays;
  out.rays.push_back(nu);
  size_t nu_idx = out.rays.size() - 1;
  for (const auto& cone : fan.cones) {
    auto coords = detail::cone_coordinates(fan, cone, nu);
    if (!coords) {
      out.cones.push_back(cone);
      continue;
    }
    for (size_t i = 0; i < cone.size(); ++i) {
      if ((*coords)[i] == 0) continue;
      std::vector<size_t> split;
      for (size_t j = 0; j < cone.size(); ++j)
        if (j != i) split.push_back(cone[j]);
      split.push_back(nu_idx);
      out.cones.push_back(std::move(split));
    }
  }
  return validate(std::move(out));
}

}  // namespace torstab
