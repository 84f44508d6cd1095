#pragma once

// Worked-example documents: classic surfaces and curves with standard
// polarizations, ready to feed through every command.

#include "torstab/io.hpp"
#include "torstab/rational.hpp"

#include <string>
#include <vector>

namespace torstab {

namespace gallery {

inline InputDocument p2(const Rat& d) {
  if (d <= 0) throw InputError("p2 degree must be positive");
  InputDocument doc;
  doc.dim = 2;
  doc.rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}};
  doc.max_cones = {{0, 1}, {1, 2}, {2, 0}};
  doc.divisor = {Rat(0), Rat(0), d};
  doc.label = "p2:" + to_string(d);
  return doc;
}

inline InputDocument p2_anticanonical() {
  InputDocument doc = p2(Rat(1));
  doc.divisor = {Rat(1), Rat(1), Rat(1)};
  doc.label = "p2_anticanonical";
  return doc;
}

inline InputDocument p1(const Rat& d) {
  if (d <= 0) throw InputError("p1 degree must be positive");
  InputDocument doc;
  doc.dim = 1;
  doc.rays = {{Int(1)}, {Int(-1)}};
  doc.max_cones = {{0}, {1}};
  doc.divisor = {Rat(0), d};
  doc.label = "p1:" + to_string(d);
  return doc;
}

inline InputDocument p1xp1(const Rat& a, const Rat& b) {
  if (a <= 0 || b <= 0) throw InputError("p1xp1 side lengths must be positive");
  InputDocument doc;
  doc.dim = 2;
  doc.rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(0)}, {Int(0), Int(-1)}};
  doc.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  doc.divisor = {Rat(0), Rat(0), a, b};
  doc.label = "p1xp1:" + to_string(a) + "," + to_string(b);
  return doc;
}

// x H - y E on the blow-up of the plane at a torus-fixed point; the fourth
// ray is the exceptional direction.
inline InputDocument blowup_p2(const Rat& x, const Rat& y) {
  if (!(x > y && y > 0)) throw InputError("blowup_p2 needs x > y > 0 for ampleness");
  InputDocument doc;
  doc.dim = 2;
  doc.rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}, {Int(1), Int(1)}};
  doc.max_cones = {{0, 3}, {3, 1}, {1, 2}, {2, 0}};
  doc.divisor = {Rat(0), Rat(0), x, -y};
  doc.label = "blowup_p2:" + to_string(x) + "," + to_string(y);
  return doc;
}

inline InputDocument hirzebruch(long a) {
  if (a < 1) throw InputError("hirzebruch twist must be a positive integer");
  InputDocument doc;
  doc.dim = 2;
  doc.rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(a)}, {Int(0), Int(-1)}};
  doc.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  doc.divisor = {Rat(0), Rat(0), Rat(1), Rat(1)};
  doc.label = "hirzebruch:" + std::to_string(a);
  return doc;
}

struct Usage {
  std::string pattern;
  std::string description;
};

inline std::vector<Usage> usage() {
  return {
      {"p2_anticanonical", "projective plane with its anticanonical polarization"},
      {"p2:d", "projective plane with the degree-d polarization, d a positive rational"},
      {"p1:d", "projective line of degree d, d a positive rational"},
      {"p1xp1:a,b", "product of two lines with side lengths a and b"},
      {"blowup_p2:x,y", "blow-up of the plane at a point, polarized by x H - y E (x > y > 0)"},
      {"hirzebruch:a", "Hirzebruch surface of twist a with a product-like polarization"},
  };
}

inline std::vector<Rat> parse_params(const std::string& s) {
  std::vector<Rat> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    out.push_back(rat_from_string(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Resolves "name" or "name:params"; throws InputError listing valid names.
inline InputDocument by_name(const std::string& request) {
  std::string name = request, params;
  if (auto colon = request.find(':'); colon != std::string::npos) {
    name = request.substr(0, colon);
    params = request.substr(colon + 1);
  }
  auto want = [&](size_t count, std::vector<Rat> defaults) {
    std::vector<Rat> p = params.empty() ? std::move(defaults) : parse_params(params);
    if (p.size() != count)
      throw InputError("'" + name + "' takes " + std::to_string(count) + " parameter(s)");
    return p;
  };
  if (name == "p2_anticanonical") {
    if (!params.empty()) throw InputError("'p2_anticanonical' takes no parameters");
    return p2_anticanonical();
  }
  if (name == "p2") return p2(want(1, {Rat(1)})[0]);
  if (name == "p1") return p1(want(1, {Rat(2)})[0]);
  if (name == "p1xp1") {
    auto p = want(2, {Rat(1), Rat(1)});
    return p1xp1(p[0], p[1]);
  }
  if (name == "blowup_p2") {
    auto p = want(2, {Rat(3), Rat(1)});
    return blowup_p2(p[0], p[1]);
  }
  if (name == "hirzebruch") {
    auto p = want(1, {Rat(2)});
    if (denominator(p[0]) != 1) throw InputError("hirzebruch twist must be a positive integer");
    return hirzebruch(long(numerator(p[0])));
  }
  std::string names;
  for (const auto& u : usage()) names += (names.empty() ? "" : ", ") + u.pattern;
  throw InputError("unknown example '" + request + "'; valid names: " + names);
}

// The default instances exercised by the test suites.
inline std::vector<std::string> default_names() {
  return {"p2_anticanonical", "p2:1", "p1:2", "p1xp1:1,1", "blowup_p2:3,1", "hirzebruch:2"};
}

}  // namespace gallery

}  // namespace torstab
