#pragma once

// Command dispatch shared by the torstab binary and the tests: every command
// maps a parsed input document to a deterministic JSON report.

#include "torstab/gallery.hpp"
#include "torstab/invariants.hpp"
#include "torstab/io.hpp"
#include "torstab/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torstab::cli {

struct CommandOptions {
  std::optional<IntVec> nu;
  std::optional<long> radius;
  std::optional<long> kmax;
  bool verbose = false;
};

struct CommandOutcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"invariants", "beta",      "futaki",
                                              "delta",      "destabilize", "criterion",
                                              "oracle",     "examples"};
  return names;
}

namespace detail {

inline long default_radius(size_t dim) { return dim <= 2 ? 10 : (dim == 3 ? 5 : 3); }

inline IntVec resolve_nu(const Geometry& g, const CommandOptions& opts, ReportDocument& rep) {
  if (!opts.nu) throw InputError("this command requires --nu");
  IntVec nu = *opts.nu;
  if (nu.size() != g.n) throw InputError("--nu must have " + std::to_string(g.n) + " entries");
  if (is_zero(nu)) throw InputError("--nu must be nonzero");
  if (!is_primitive(nu)) {
    auto [prim, factor] = primitivize(nu);
    rep.warn("nu " + to_string(nu) + " is not primitive; using " + to_string(prim) +
             " (factor " + factor.str() + ")");
    nu = prim;
  }
  return nu;
}

inline Json valuation_block(const Geometry& g, const IntVec& nu, bool verbose) {
  Json v;
  v["nu"] = json_int_vec(nu);
  auto val = minimal_cone_containing(g.fan, nu);
  v["log_discrepancy"] = json_rat(val.log_discrepancy);
  v["minimal_cone"] = val.minimal_cone;
  v["cone_coefficients"] = json_rat_vec(val.coefficients);
  v["is_ray"] = val.is_ray;
  Norms norms = tau_s_j(g, nu);
  v["tau"] = json_rat(norms.tau);
  v["S"] = json_rat(norms.s);
  v["j"] = json_rat(norms.j);
  v["j_hat"] = json_rat(norms.j_hat);
  Rat bi = beta_integral(g, nu);
  Rat bb = beta_barycentre(g, nu);
  v["beta_hat"] = json_rat(bi);
  v["beta"] = json_rat(factorial(g.n) * bi);
  v["beta_hat_integral"] = json_rat(bi);
  v["beta_hat_barycentre"] = json_rat(bb);
  v["routes_agree"] = (bi == bb);
  v["futaki_pairing"] = json_rat(futaki(g, nu));
  if (verbose) {
    v["beta_hat_printed_formula"] = json_rat(beta_barycentre_with_discrepancy_term(g, nu));
    v["beta_hat_printed_formula_note"] =
        "variant keeping the (A-1)·Vol_M term; differs from the definition used here";
  }
  return v;
}

inline std::string verdict_name(CriterionVerdict v) {
  switch (v) {
    case CriterionVerdict::Satisfied: return "SATISFIED";
    case CriterionVerdict::Boundary: return "BOUNDARY";
    default: return "NOT_SATISFIED";
  }
}

inline Json threshold_json(const Threshold& t) {
  Json j;
  switch (t.kind) {
    case ThresholdKind::Finite:
      j["kind"] = "finite";
      j["value"] = json_rat(t.value);
      break;
    case ThresholdKind::MinusInfinity: j["kind"] = "minus_infinity"; break;
    case ThresholdKind::Infeasible: j["kind"] = "infeasible"; break;
  }
  return j;
}

inline CommandOutcome render(const ReportDocument& rep) { return {0, rep.dump(), ""}; }

}  // namespace detail

inline CommandOutcome run_command(const std::string& command, const InputDocument& doc,
                                  const CommandOptions& opts) {
  try {
    auto [fan, divisor] = realize(doc);
    ReportDocument rep(command, doc);
    Json& res = rep.body["result"];

    if (command == "invariants") {
      Geometry g = make_geometry(fan, divisor);
      res["dim"] = g.n;
      res["ample"] = true;
      res["mu"] = json_rat(g.mu());
      res["vol"] = json_rat(g.vol());
      res["vol_m"] = json_rat(g.vol_m);
      res["vol_boundary"] = json_rat(g.vol_dp);
      res["barycentre"] = json_rat_vec(g.b_p);
      res["boundary_barycentre"] = json_rat_vec(g.b_dp);
      res["futaki_vanishes"] = futaki_vanishes(g);
      DeltaResult dr = delta_toric(g);
      res["delta_toric"] = json_rat(dr.delta);
      res["delta_minimizer_ray"] = dr.minimizer_ray;
      AlphaBound ab = alpha_lower_bound_constant(g);
      res["alpha_bound_constant"] = json_rat(ab.constant);
      res["alpha_bound_asserted"] = ab.hypothesis_holds;
      rep.caveat(kDeltaCaveat);
      if (opts.nu) {
        IntVec nu = detail::resolve_nu(g, opts, rep);
        res["valuation"] = detail::valuation_block(g, nu, opts.verbose);
      }
      return detail::render(rep);
    }

    if (command == "beta") {
      Geometry g = make_geometry(fan, divisor);
      IntVec nu = detail::resolve_nu(g, opts, rep);
      res = detail::valuation_block(g, nu, opts.verbose);
      return detail::render(rep);
    }

    if (command == "futaki") {
      Geometry g = make_geometry(fan, divisor);
      res["futaki_vanishes"] = futaki_vanishes(g);
      res["barycentre"] = json_rat_vec(g.b_p);
      res["boundary_barycentre"] = json_rat_vec(g.b_dp);
      if (opts.nu) {
        IntVec nu = detail::resolve_nu(g, opts, rep);
        res["pairing"] = json_rat(futaki(g, nu));
        res["nu"] = json_int_vec(nu);
      }
      return detail::render(rep);
    }

    if (command == "delta") {
      Geometry g = make_geometry(fan, divisor);
      long radius = opts.radius.value_or(detail::default_radius(g.n));
      DeltaResult dr = delta_toric(g);
      DeltaBruteResult br = delta_toric_brute(g, radius);
      res["delta_toric"] = json_rat(dr.delta);
      res["minimizer_ray"] = dr.minimizer_ray;
      res["brute"] = Json{{"delta", json_rat(br.delta)},
                          {"minimizer", json_int_vec(br.minimizer)},
                          {"radius", radius}};
      res["brute_agrees"] = (dr.delta == br.delta);
      rep.caveat(kDeltaCaveat);
      return detail::render(rep);
    }

    if (command == "destabilize") {
      Geometry g = make_geometry(fan, divisor);
      long radius = opts.radius.value_or(detail::default_radius(g.n));
      DestabilizerResult dr = destabilizer_search(g, radius);
      res["radius"] = radius;
      res["found_negative"] = dr.found_negative;
      res["all_beta_zero"] = dr.all_zero;
      res["minimizer"] = json_int_vec(dr.minimizer);
      res["beta_hat"] = json_rat(dr.beta_hat);
      res["ratio"] = json_rat(dr.ratio);
      if (!dr.found_negative) {
        res["status"] = dr.all_zero ? "none found (all beta vanish on the sampled box)"
                                    : "none found";
      } else {
        res["status"] = "destabilizer found";
      }
      return detail::render(rep);
    }

    if (command == "criterion") {
      Geometry g = make_geometry(fan, divisor);
      CriterionReport cr = sufficient_criterion(g);
      res["verdict"] = detail::verdict_name(cr.verdict);
      res["mu"] = json_rat(cr.mu);
      res["delta_toric"] = json_rat(cr.delta);
      res["gamma"] = json_rat(cr.gamma);
      res["bound"] = json_rat(cr.mu + cr.gamma);
      res["t_min"] = detail::threshold_json(cr.t_min);
      rep.caveat(kDeltaCaveat);
      return detail::render(rep);
    }

    if (command == "oracle") {
      Geometry g = make_geometry(fan, divisor);
      IntVec nu = detail::resolve_nu(g, opts, rep);
      long kmax = opts.kmax.value_or(std::max<long>(8, long(g.n) + 5));
      OracleReport orep = verify_df_equals_beta(g, nu, kmax);
      res["nu"] = json_int_vec(nu);
      res["k_max"] = kmax;
      res["df"] = json_rat(orep.df);
      res["beta"] = json_rat(orep.beta);
      res["df_times_vol"] = json_rat(orep.df * g.vol());
      res["verify"] = orep.pass ? "pass" : "fail";
      res["df_routes_agree"] = orep.df_routes_agree;
      res["level_range_ok"] = orep.level_range_ok;
      res["coefficients"] = Json{{"a0", json_rat(orep.coeffs.a0)},
                                 {"a1", json_rat(orep.coeffs.a1)},
                                 {"b0", json_rat(orep.coeffs.b0)},
                                 {"b1", json_rat(orep.coeffs.b1)},
                                 {"f_top", json_rat(orep.coeffs.f_top)},
                                 {"f_sub", json_rat(orep.coeffs.f_sub)},
                                 {"fit_verified", orep.coeffs.fit_verified}};
      Json samples = Json::array();
      for (const auto& s : orep.samples)
        samples.push_back(Json{{"k", s.k},
                               {"h", std::stoll(s.h.str())},
                               {"w", json_rat(s.w)},
                               {"f", json_rat(s.f)}});
      res["samples"] = samples;
      if (!orep.pass) {
        CommandOutcome out = detail::render(rep);
        out.exit_code = 2;
        out.err = "oracle verification failed\n";
        return out;
      }
      return detail::render(rep);
    }

    std::string names;
    for (const auto& n : command_names()) names += (names.empty() ? "" : ", ") + n;
    throw InputError("unknown command '" + command + "'; valid commands: " + names);
  } catch (const InputError& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  } catch (const MathError& e) {
    return {2, "", std::string("rejected: ") + e.what() + "\n"};
  }
}

inline CommandOutcome run_command_on_text(const std::string& command, const std::string& text,
                                          const CommandOptions& opts) {
  try {
    return run_command(command, document_from_text(text), opts);
  } catch (const InputError& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  }
}

inline CommandOutcome run_examples(const std::string& request) {
  try {
    if (request == "list") {
      Json j;
      Json arr = Json::array();
      for (const auto& u : gallery::usage())
        arr.push_back(Json{{"name", u.pattern}, {"description", u.description}});
      j["examples"] = arr;
      j["version"] = kVersion;
      return {0, j.dump(2) + "\n", ""};
    }
    InputDocument doc = gallery::by_name(request);
    return {0, doc.to_json().dump(2) + "\n", ""};
  } catch (const InputError& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace torstab::cli
