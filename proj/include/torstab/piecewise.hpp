#pragma once

// Exact univariate polynomials and piecewise polynomials on [0, tau].

#include "torstab/rational.hpp"

#include <cstddef>
#include <vector>

namespace torstab {

struct Polynomial {
  RatVec coeffs;  // ascending degree

  Rat eval(const Rat& x) const {
    Rat v = 0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
  }

  size_t degree() const {
    size_t d = coeffs.size();
    while (d > 0 && coeffs[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;
  }

  void trim() {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  }

  Polynomial antiderivative() const {
    Polynomial p;
    p.coeffs.assign(coeffs.size() + 1, Rat(0));
    for (size_t i = 0; i < coeffs.size(); ++i) p.coeffs[i + 1] = coeffs[i] / Rat(int(i) + 1);
    return p;
  }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r;
    r.coeffs.assign(std::max(coeffs.size(), o.coeffs.size()), Rat(0));
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += coeffs[i];
    for (size_t i = 0; i < o.coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
  }

  Polynomial scaled(const Rat& f) const {
    Polynomial r = *this;
    for (auto& c : r.coeffs) c *= f;
    return r;
  }
};

// Unique interpolating polynomial through exact sample points.
inline Polynomial interpolate(const RatVec& xs, const RatVec& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw InputError("bad interpolation data");
  Polynomial acc;
  acc.coeffs.assign(xs.size(), Rat(0));
  for (size_t i = 0; i < xs.size(); ++i) {
    // Lagrange basis polynomial for node i, scaled by y_i.
    RatVec basis{Rat(1)};
    Rat denom = 1;
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      RatVec next(basis.size() + 1, Rat(0));
      for (size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= xs[j] * basis[k];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    Rat f = ys[i] / denom;
    for (size_t k = 0; k < basis.size(); ++k) acc.coeffs[k] += f * basis[k];
  }
  acc.trim();
  return acc;
}

struct Piece {
  Rat lo, hi;
  Polynomial poly;
};

struct PiecewisePolynomial {
  std::vector<Piece> pieces;  // contiguous, lo of first is 0

  Rat domain_end() const { return pieces.empty() ? Rat(0) : pieces.back().hi; }

  Rat eval(const Rat& x) const {
    if (pieces.empty()) throw MathError("empty piecewise polynomial");
    if (x < pieces.front().lo || x > pieces.back().hi)
      throw MathError("evaluation outside the domain");
    for (const auto& p : pieces)
      if (x <= p.hi) return p.poly.eval(x);
    return pieces.back().poly.eval(x);
  }

  Rat integral() const {
    Rat total = 0;
    for (const auto& p : pieces) {
      Polynomial anti = p.poly.antiderivative();
      total += anti.eval(p.hi) - anti.eval(p.lo);
    }
    return total;
  }

  // Continuity across interior breakpoints, exact.
  bool is_continuous() const {
    for (size_t i = 0; i + 1 < pieces.size(); ++i)
      if (pieces[i].poly.eval(pieces[i].hi) != pieces[i + 1].poly.eval(pieces[i + 1].lo))
        return false;
    return true;
  }
};

inline Rat integrate(const PiecewisePolynomial& pp) { return pp.integral(); }

}  // namespace torstab
