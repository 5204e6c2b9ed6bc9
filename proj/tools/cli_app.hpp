#pragma once

// mrgp command-line front end: solve, verify, classify, oracle.
//
// Exit codes: 0 success, 2 success with an empty solution set, 1 arithmetic
// or internal error (or an oracle mismatch), 64 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mrgp/mrgp.hpp"

namespace mrgp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitEmpty = 2;
inline constexpr int kExitUsage = 64;

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

/// "a,b,c,d" with each entry an element in text form, or "a_p,a_q,...,d_p,d_q"
/// (eight integers, w-basis coordinates).
inline MRCoefficients parse_coeffs(const QuadField& f, const std::string& text) {
  const std::vector<std::string> tok = split(text, ',');
  std::vector<QuadInt> vals;
  if (tok.size() == 4) {
    for (const auto& t : tok) vals.push_back(parse_element(f, t));
  } else if (tok.size() == 8) {
    for (std::size_t i = 0; i < 8; i += 2) {
      try {
        vals.emplace_back(f, Int(tok[i]), Int(tok[i + 1]));
      } catch (const std::invalid_argument&) {
        throw UsageError("coefficient pair '" + tok[i] + "," + tok[i + 1] + "' is not two integers");
      }
    }
  } else {
    throw UsageError("--coeffs expects 4 elements or 8 integers, got " + std::to_string(tok.size()) + " entries");
  }
  return MRCoefficients(vals[0], vals[1], vals[2], vals[3]);
}

inline std::pair<long, long> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) throw UsageError("--z-range expects lo..hi");
  try {
    std::size_t a = 0;
    std::size_t b = 0;
    const std::string lo_s = text.substr(0, pos);
    const std::string hi_s = text.substr(pos + 2);
    const long lo = std::stol(lo_s, &a);
    const long hi = std::stol(hi_s, &b);
    if (a != lo_s.size() || b != hi_s.size() || lo > hi) throw UsageError("bad --z-range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("bad --z-range '" + text + "'");
  }
}

struct FamilyOut {
  json meta;
  std::vector<std::pair<long, GPTriple>> members;
};

struct SolveOutput {
  std::string method;
  std::vector<GPTriple> finite;
  std::vector<FamilyOut> families;
  bool is_finite = true;

  bool empty() const { return finite.empty() && families.empty(); }
};

inline json triple_json(const GPTriple& t) { return json::array({to_string(t.x), to_string(t.y), to_string(t.z)}); }

inline std::string triple_text(const GPTriple& t) {
  return "(" + to_sqrt_string(t.x) + ", " + to_sqrt_string(t.y) + ", " + to_sqrt_string(t.z) + ")";
}

inline bool is_markoff_shape(const MRCoefficients& k, Int* d_out) {
  const QuadInt one = from_integer(k.field(), 1);
  if (k.a() != one || k.b() != one || k.c() != one || !k.d().is_rational_integer() || k.d().p() <= 0) return false;
  *d_out = k.d().p();
  return true;
}

inline json coeffs_json(const MRCoefficients& k) {
  return json::array({to_string(k.a()), to_string(k.b()), to_string(k.c()), to_string(k.d())});
}

inline std::optional<SolveOutput> solve_closed_form(const MRCoefficients& k, long z_lo, long z_hi) {
  const QuadField& f = k.field();
  SolveOutput out;
  out.method = "closed-form";
  Int d;
  if (f.is_rational()) {
    out.method = "closed-form:rational";
    out.finite = rational_gp(k.a().p(), k.b().p(), k.c().p(), k.d().p());
    return out;
  }
  if (is_markoff_shape(k, &d) && f.is_imaginary()) {
    out.method = "closed-form:imaginary-markoff";
    out.finite = imaginary_quadratic_markoff(d, -f.d());
    return out;
  }
  if (is_markoff_shape(k, &d) && f.is_real()) {
    out.method = "closed-form:real-markoff";
    const RealQuadraticMarkoff r = real_quadratic_markoff(d, f.d());
    for (const MarkoffFamily& fam : r.families) {
      FamilyOut fo;
      fo.meta = {{"source", "closed-form"}, {"D", f.d()}, {"coeffs", coeffs_json(k)}, {"d", d.get_str()},
                 {"t", "1"},                {"eta", to_string(unit_pow(r.epsilon, fam.k))},
                 {"tau", fam.n.get_str()},  {"k", fam.k.get_str()}, {"n", fam.n.get_str()},
                 {"generator", to_string(r.epsilon)}};
      for (long z = z_lo; z <= z_hi; ++z) {
        fo.members.emplace_back(z, fam.member(z, 1));
        fo.members.emplace_back(z, fam.member(z, -1));
      }
      out.families.push_back(std::move(fo));
    }
    out.is_finite = out.families.empty();
    return out;
  }
  if (is_unit(k.a()) && is_unit(k.d())) {
    out.method = "closed-form:unit-coefficients";
    const UnitCoefficientFamily fam = unit_coefficient_gp(k);
    if (!fam.units.fundamental_unit) {
      out.finite = fam.materialize(0, 0);
      std::sort(out.finite.begin(), out.finite.end(), triple_less);
      return out;
    }
    FamilyOut fo;
    fo.meta = {{"source", "closed-form"}, {"D", f.d()}, {"coeffs", coeffs_json(k)}, {"t", "1"}, {"eta", "1"},
               {"tau", "1"}, {"k", "0"},
               {"generator", to_string(*fam.units.fundamental_unit)}};
    for (long z = z_lo; z <= z_hi; ++z) {
      const QuadInt u = unit_pow(*fam.units.fundamental_unit, Int(z));
      if (auto t = fam.member(u)) fo.members.emplace_back(z, *t);
      if (auto t = fam.member(-u)) fo.members.emplace_back(z, *t);
    }
    out.families.push_back(std::move(fo));
    out.is_finite = false;
    return out;
  }
  return std::nullopt;
}

inline SolveOutput solve_algorithm(const MRCoefficients& k, long z_lo, long z_hi) {
  SolveOutput out;
  out.method = "algorithm";
  const SolutionSet sols = solve(k);
  const GPResult gp = triples_from_points(k, sols);
  out.finite = gp.finite_triples;
  out.is_finite = gp.is_finite;
  for (const TripleFamily& fam : gp.families) {
    FamilyOut fo;
    const SolutionFamily& b = fam.base;
    fo.meta = {{"source", "algorithm"},
               {"D", k.field().d()},
               {"coeffs", coeffs_json(k)},
               {"t", to_string(b.t)},
               {"eta", to_string(b.eta)},
               {"tau", b.tau.get_str()},
               {"k", b.eps_exponent.get_str()},
               {"delta0", b.delta0.get_str()},
               {"generator", to_string(*b.generator)}};
    for (long z = z_lo; z <= z_hi; ++z)
      for (GPTriple& t : fam.materialize(z, z)) fo.members.emplace_back(z, std::move(t));
    out.families.push_back(std::move(fo));
  }
  return out;
}

inline json solve_json(const QuadField& f, const MRCoefficients& k, const SolveOutput& s) {
  json j;
  j["field"] = {{"name", f.name()}, {"D", f.is_rational() ? json(nullptr) : json(f.d())}, {"w", f.omega_text()}};
  j["coeffs"] = coeffs_json(k);
  j["finite_triples"] = json::array();
  for (const GPTriple& t : s.finite) j["finite_triples"].push_back(triple_json(t));
  j["families"] = json::array();
  for (const FamilyOut& fo : s.families) {
    json fj = fo.meta;
    fj["members"] = json::array();
    for (const auto& [z, t] : fo.members) fj["members"].push_back({{"z", z}, {"triple", triple_json(t)}});
    j["families"].push_back(std::move(fj));
  }
  j["is_finite"] = s.is_finite;
  j["method"] = s.method;
  return j;
}

inline void solve_text(std::ostream& out, const QuadField& f, const MRCoefficients& k, const SolveOutput& s) {
  out << "field: " << f.name() << "  (" << f.omega_text() << ")\n";
  out << "coeffs: " << to_string(k.a()) << ", " << to_string(k.b()) << ", " << to_string(k.c()) << ", "
      << to_string(k.d()) << "\n";
  out << "method: " << s.method << "\n";
  if (s.empty()) {
    out << "empty\n";
    return;
  }
  out << "finite triples: " << s.finite.size() << "\n";
  for (const GPTriple& t : s.finite) out << "  " << triple_text(t) << "\n";
  out << "families: " << s.families.size() << (s.is_finite ? "" : " (infinite)") << "\n";
  int i = 0;
  for (const FamilyOut& fo : s.families) {
    out << "  family " << ++i << ":";
    for (const char* key : {"t", "eta", "tau", "k", "n", "d"})
      if (fo.meta.contains(key)) out << " " << key << " = " << fo.meta[key].get<std::string>();
    out << "\n";
    for (const auto& [z, t] : fo.members) out << "    z = " << z << ": " << triple_text(t) << "\n";
  }
}

struct Options {
  std::string field = "Q";
  std::string coeffs;
  std::string z_range = "-2..2";
  std::string format = "text";
  std::string method = "auto";
  std::string triple;
  long height = 100;
};

inline int cmd_solve(const Options& o, std::ostream& out) {
  const QuadField f = parse_field(o.field);
  const MRCoefficients k = parse_coeffs(f, o.coeffs);
  const auto [lo, hi] = parse_range(o.z_range);
  std::optional<SolveOutput> s;
  if (o.method == "closed-form") {
    s = solve_closed_form(k, lo, hi);
    if (!s) throw UsageError("no closed form applies to these coefficients; use --method algorithm");
  } else if (o.method == "auto") {
    s = solve_closed_form(k, lo, hi);
    if (!s) s = solve_algorithm(k, lo, hi);
  } else {
    s = solve_algorithm(k, lo, hi);
  }
  if (o.format == "json") out << solve_json(f, k, *s).dump(2) << "\n";
  else solve_text(out, f, k, *s);
  return s->empty() ? kExitEmpty : kExitOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const QuadField f = parse_field(o.field);
  const MRCoefficients k = parse_coeffs(f, o.coeffs);
  const std::vector<std::string> parts = split(o.triple, ';');
  if (parts.size() != 3) throw UsageError("--triple expects x;y;z");
  const QuadInt x = parse_element(f, parts[0]);
  const QuadInt y = parse_element(f, parts[1]);
  const QuadInt z = parse_element(f, parts[2]);
  const bool eq_ok = equation_value(k, x, y, z).is_zero();
  // x = alpha != 0, beta = y / x integral, z = alpha beta^2  <=>  x != 0, x | y, y^2 = x z
  const bool gp_ok = !x.is_zero() && divides(x, y) && y * y == x * z;
  const bool ok = eq_ok && gp_ok;
  if (o.format == "json") {
    out << json{{"equation", eq_ok}, {"geometric_progression", gp_ok}, {"pass", ok}}.dump() << "\n";
  } else {
    out << "equation a x^2 + b y^2 + c z^2 = d x y z: " << (eq_ok ? "ok" : "FAIL") << "\n";
    out << "geometric progression (x != 0, x | y, y^2 = x z): " << (gp_ok ? "ok" : "FAIL") << "\n";
    out << (ok ? "pass" : "fail") << "\n";
  }
  return ok ? kExitOk : kExitError;
}

inline int cmd_classify(const Options& o, std::ostream& out) {
  const QuadField f = parse_field(o.field);
  const MRCoefficients k = parse_coeffs(f, o.coeffs);
  const FinitenessVerdict v = classify_finiteness(k);
  if (o.format == "json") out << json{{"verdict", finiteness_name(v.verdict)}, {"reason", v.reason}}.dump() << "\n";
  else out << finiteness_name(v.verdict) << ": " << v.reason << "\n";
  return kExitOk;
}

inline int cmd_oracle(const Options& o, std::ostream& out) {
  const QuadField f = parse_field(o.field);
  const MRCoefficients k = parse_coeffs(f, o.coeffs);
  if (o.height < 1) throw UsageError("--height must be >= 1");
  const SolutionSet sols = solve(k);
  const OracleReport r = compare(sols, brute_force_curve_points(k, o.height), Int(o.height));
  auto pts = [](const std::vector<CurvePoint>& v) {
    json a = json::array();
    for (const CurvePoint& p : v) a.push_back(json::array({to_string(p.x), to_string(p.y)}));
    return a;
  };
  if (o.format == "json") {
    out << json{{"height", o.height},        {"solver_points", r.solver_count}, {"oracle_points", r.oracle_count},
                {"missing", pts(r.missing)}, {"extra", pts(r.extra)},           {"agree", r.empty()}}
               .dump(2)
        << "\n";
  } else {
    out << "height bound: " << o.height << "\n";
    out << "solver points in box: " << r.solver_count << "\n";
    out << "oracle points in box: " << r.oracle_count << "\n";
    for (const CurvePoint& p : r.missing) out << "  missing: (" << to_string(p.x) << ", " << to_string(p.y) << ")\n";
    for (const CurvePoint& p : r.extra) out << "  extra: (" << to_string(p.x) << ", " << to_string(p.y) << ")\n";
    out << (r.empty() ? "diff: empty" : "diff: NONEMPTY") << "\n";
  }
  return r.empty() ? kExitOk : kExitError;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Markoff-Rosenberger triples in geometric progression over Q and quadratic fields"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "Q or \"Q(sqrt D)\" with D a nonzero squarefree integer")->required();
    sub->add_option("--coeffs", o.coeffs, "a,b,c,d (elements in text form) or 8 integers (w-basis pairs)")
        ->required();
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "enumerate all triples in geometric progression");
  add_common(solve_cmd);
  solve_cmd->add_option("--z-range", o.z_range, "family window lo..hi (default -2..2)");
  solve_cmd->add_option("--method", o.method, "auto, algorithm or closed-form")
      ->check(CLI::IsMember({"auto", "algorithm", "closed-form"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "check one triple");
  add_common(verify_cmd);
  verify_cmd->add_option("--triple", o.triple, "x;y;z in element text form")->required();

  CLI::App* classify_cmd = app.add_subcommand("classify", "finite / infinite verdict");
  add_common(classify_cmd);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "compare the solver with brute force in a height box");
  add_common(oracle_cmd);
  oracle_cmd->add_option("--height", o.height, "height bound B (max |basis coordinate|)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*classify_cmd) return cmd_classify(o, out);
    if (*oracle_cmd) return cmd_oracle(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MathError& e) {
    if (e.kind() == ErrorKind::parse_error || e.kind() == ErrorKind::invalid_d ||
        e.kind() == ErrorKind::non_squarefree || e.kind() == ErrorKind::zero_coefficient) {
      err << "usage error: " << e.what() << "\n";
      return kExitUsage;
    }
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace mrgp::cli
