#pragma once

// Exact scalar arithmetic. Every quantity in the library is an arbitrary
// precision rational; no floating point appears anywhere downstream.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace torstab {

using Int = boost::multiprecision::cpp_int;

// cpp_rational keeps lowest terms with a positive denominator, which is the
// canonical form all serialization and equality tests rely on.
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

struct MathError : std::domain_error {
  using std::domain_error::domain_error;
};

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int rat_floor(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

inline std::string to_string(const Int& n) { return n.str(); }

// Canonical "p" / "p/q" rendering.
inline std::string to_string(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

inline std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

inline std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

// Accepts "p" or "p/q" with optional sign on p; rejects everything else.
inline Rat rat_from_string(const std::string& text) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) throw InputError("invalid rational literal '" + text + "'");
    return Rat(Int(text));
  }
  std::string p = text.substr(0, slash), q = text.substr(slash + 1);
  if (!is_int(p) || !is_int(q)) throw InputError("invalid rational literal '" + text + "'");
  Int den(q);
  if (den == 0) throw InputError("zero denominator in rational literal '" + text + "'");
  return Rat(Int(p), den);
}

inline Int int_from_string(const std::string& text) {
  Rat q = rat_from_string(text);
  if (denominator(q) != 1) throw InputError("expected an integer, got '" + text + "'");
  return numerator(q);
}

}  // namespace torstab
