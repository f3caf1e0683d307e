#include "report.hpp"

#include "error.hpp"
#include "macwilliams.hpp"

#include <iomanip>
#include <sstream>

namespace rankmetric {

namespace {

std::string num(std::size_t v) { return std::to_string(v); }

Json opt_num(const std::optional<std::size_t>& v) { return v ? Json(num(*v)) : Json(nullptr); }

Json rational_json(const Rational& x) { return Json{{"exact", to_decimal(x)}, {"approx", decimal_approx(x)}}; }

Json interval_json(const Interval& v) {
  return Json{{"lo", to_decimal(v.lo)}, {"hi", to_decimal(v.hi)}, {"lo_approx", decimal_approx(v.lo)}, {"hi_approx", decimal_approx(v.hi)}};
}

std::string tuple_text(const Json& arr) {
  std::string out = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ",";
    out += arr[i].get<std::string>();
  }
  return out + ")";
}

std::string value_or(const Json& v, const char* fallback) { return v.is_null() ? fallback : v.get<std::string>(); }

void row(std::ostringstream& out, const std::string& key, const std::string& value) {
  out << "  " << std::left << std::setw(28) << key << value << "\n";
}

}  // namespace

std::string decimal_approx(const Rational& x, unsigned digits) {
  const BigInt scale = ipow(10, digits);
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  const bool neg = num < 0;
  BigInt q, r;
  boost::multiprecision::divide_qr(BigInt(neg ? BigInt(-num) : num) * scale, den, q, r);
  std::string s = q.str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return (neg ? "-" : "") + s;
}

Json distribution_json(const RankDistribution& w) {
  Json arr = Json::array();
  for (const auto& c : w.counts) arr.push_back(c.str());
  return arr;
}

Json covering_json(const CoveringReport& r) {
  return Json{{"min_distance", num(r.min_distance)},
              {"dual_min_distance", num(r.dual_min_distance)},
              {"lower_bound", num(r.lower_bound)},
              {"exact", opt_num(r.exact)},
              {"dual_distance_bound", opt_num(r.dual_distance_bound)},
              {"external_distance_bound", num(r.external_distance_bound)},
              {"initial_set_bound", opt_num(r.initial_set_bound)}};
}

Json analyze_json(const RankMetricCode& c, const EnumOptions& opt) {
  const auto w = rank_distribution(c, opt);
  const auto wd = transform(w, c.n(), c.m(), c.field()->q());
  const std::size_t d = minimum_distance(w);
  const std::size_t maxrk = maximum_rank(w);
  const std::size_t singleton = c.m() * (c.n() + 1 - d) - c.dim();
  const std::size_t anticode = c.m() * maxrk - c.dim();
  const auto anti = is_optimal_anticode(c, opt);

  Json j;
  j["field"] = c.field()->describe();
  j["n"] = num(c.n());
  j["m"] = num(c.m());
  j["dim"] = num(c.dim());
  j["size"] = c.size().str();
  j["min_distance"] = num(d);
  j["max_rank"] = num(maxrk);
  j["rank_distribution"] = distribution_json(w);
  j["dual_rank_distribution"] = distribution_json(wd);
  j["dual_min_distance"] = num(minimum_distance(wd));
  j["singleton_defect"] = num(singleton);
  j["mrd"] = singleton == 0;
  j["anticode_defect"] = num(anticode);
  j["optimal_anticode"] = anti.optimal;
  if (anti.side) {
    j["anticode_side"] = *anti.side == SupportSide::column ? "column" : "row";
    Json basis = Json::array();
    for (const auto& r : anti.support->basis()) {
      Json v = Json::array();
      for (auto e : r) v.push_back(c.field()->format(e));
      basis.push_back(v);
    }
    j["anticode_support"] = basis;
  } else {
    j["anticode_side"] = nullptr;
    j["anticode_support"] = nullptr;
  }
  if (c.is_zero()) {
    j["initial_set"] = nullptr;
  } else {
    Json in = Json::array();
    for (const auto& p : initial_set(c)) in.push_back(Json::array({num(p.row), num(p.col)}));
    j["initial_set"] = in;
  }
  j["covering"] = covering_json(covering_report(c, opt));
  return j;
}

Json macwilliams_json(const RankDistribution& w, std::size_t n, std::size_t m, const BigInt& q) {
  const auto wd = transform(w, n, m, q);
  const auto by_moments = solve_dual_distribution_by_moments(w, n, m, q);
  return Json{{"q", q.str()},
              {"n", num(n)},
              {"m", num(m)},
              {"rank_distribution", distribution_json(w)},
              {"dual_rank_distribution", distribution_json(wd)},
              {"moments_agree", by_moments == wd}};
}

Json density_json(const DensityReport& r) {
  Json j;
  j["q"] = r.q.str();
  j["n"] = num(r.n);
  j["m"] = num(r.m);
  j["d"] = num(r.d);
  j["k"] = num(r.k);
  if (r.exact) {
    j["exact"] = Json{{"codes", r.exact->total.str()},
                      {"exact_distance", r.exact->exact_distance.str()},
                      {"ball_avoiding", r.exact->ball_avoiding.str()},
                      {"common_complement", r.exact->common_complement.str()},
                      {"density", rational_json(r.exact->density)}};
  } else {
    j["exact"] = nullptr;
  }
  j["bound_cc"] = rational_json(r.bound_cc);
  j["bound_ball"] = rational_json(r.bound_ball);
  j["asymptotic_q"] = Json{{"limit", rational_json(r.asymptotic_q.value)}, {"order", r.asymptotic_q.description}};
  j["asymptotic_q_bound"] = r.asymptotic_q_bound ? rational_json(*r.asymptotic_q_bound) : Json(nullptr);
  if (r.asymptotic_m) {
    const auto& b = *r.asymptotic_m;
    j["asymptotic_m"] = Json{{"truncation", num(b.truncation)},
                             {"precision_bits", num(b.precision_bits)},
                             {"phi", interval_json(b.phi)},
                             {"inverse_phi", interval_json(b.inverse_phi)},
                             {"antrobus_bound", interval_json(b.antrobus)},
                             {"common_complement_bound", interval_json(b.common_complement)},
                             {"half_bound", rational_json(b.half_bound)}};
  } else {
    j["asymptotic_m"] = nullptr;
  }
  return j;
}

Json verify_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json jc{{"name", c.name}, {"passed", c.passed}, {"cases", std::to_string(c.cases)}, {"detail", c.detail}};
    if (c.counterexample) {
      const auto& ex = *c.counterexample;
      jc["counterexample"] = Json{{"input", ex.input}, {"expected", ex.expected}, {"actual", ex.actual}, {"code_file", ex.code_file}};
    } else {
      jc["counterexample"] = nullptr;
    }
    checks.push_back(jc);
  }
  return Json{{"level", to_string(r.level)}, {"passed", r.passed()}, {"checks", checks}};
}

std::string covering_text(const Json& j) {
  std::ostringstream out;
  out << "covering radius\n";
  row(out, "d(C)", j["min_distance"].get<std::string>());
  row(out, "d(C^perp)", j["dual_min_distance"].get<std::string>());
  row(out, "lower bound", j["lower_bound"].get<std::string>());
  row(out, "exact", value_or(j["exact"], "over budget"));
  row(out, "dual distance bound", value_or(j["dual_distance_bound"], "undefined (ambient code)"));
  row(out, "external distance bound", j["external_distance_bound"].get<std::string>());
  row(out, "initial set bound", value_or(j["initial_set_bound"], "undefined (zero code)"));
  return out.str();
}

std::string analyze_text(const Json& j) {
  std::ostringstream out;
  out << "field: " << j["field"].get<std::string>() << "\n";
  out << "shape: " << j["n"].get<std::string>() << " x " << j["m"].get<std::string>() << "\n";
  out << "dim: " << j["dim"].get<std::string>() << " (|C| = " << j["size"].get<std::string>() << ")\n";
  out << "W(C) = " << tuple_text(j["rank_distribution"]) << "\n";
  out << "W(C^perp) = " << tuple_text(j["dual_rank_distribution"]) << "\n";
  out << "d(C^perp) = " << j["dual_min_distance"].get<std::string>() << "\n";
  out << "maxrk = " << j["max_rank"].get<std::string>() << "\n";
  out << "MRD: " << (j["mrd"].get<bool>() ? "yes" : "no") << ", d = " << j["min_distance"].get<std::string>()
      << " (Singleton defect " << j["singleton_defect"].get<std::string>() << ")\n";
  out << "optimal anticode: " << (j["optimal_anticode"].get<bool>() ? "yes" : "no") << " (anticode defect "
      << j["anticode_defect"].get<std::string>() << ")";
  if (!j["anticode_side"].is_null()) {
    out << ", " << j["anticode_side"].get<std::string>() << " support U = <";
    bool first = true;
    for (const auto& v : j["anticode_support"]) {
      if (!first) out << "; ";
      first = false;
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i].get<std::string>();
    }
    out << ">";
  }
  out << "\n";
  out << "in(C) = ";
  if (j["initial_set"].is_null()) {
    out << "undefined (zero code)";
  } else {
    out << "{";
    bool first = true;
    for (const auto& p : j["initial_set"]) {
      out << (first ? "" : ",") << "(" << p[0].get<std::string>() << "," << p[1].get<std::string>() << ")";
      first = false;
    }
    out << "}";
  }
  out << "\n" << covering_text(j["covering"]);
  return out.str();
}

std::string macwilliams_text(const Json& j) {
  std::ostringstream out;
  out << "W(C) = " << tuple_text(j["rank_distribution"]) << "\n";
  out << "W(C^perp) = " << tuple_text(j["dual_rank_distribution"]) << "\n";
  out << "binomial moments agree: " << (j["moments_agree"].get<bool>() ? "yes" : "no") << "\n";
  return out.str();
}

std::string density_text(const Json& j) {
  std::ostringstream out;
  auto rat = [](const Json& r) { return r["exact"].get<std::string>() + " ~ " + r["approx"].get<std::string>(); };
  auto iv = [](const Json& v) { return "[" + v["lo_approx"].get<std::string>() + ", " + v["hi_approx"].get<std::string>() + "]"; };
  out << "density of MRD codes, q=" << j["q"].get<std::string>() << " n=" << j["n"].get<std::string>() << " m=" << j["m"].get<std::string>()
      << " d=" << j["d"].get<std::string>() << " (k=" << j["k"].get<std::string>() << ")\n";
  if (j["exact"].is_null()) {
    row(out, "exact", "not computed");
  } else {
    const auto& e = j["exact"];
    row(out, "exact", rat(e["density"]));
    row(out, "codes examined", e["codes"].get<std::string>());
    row(out, "with d(C) = d", e["exact_distance"].get<std::string>());
    row(out, "avoiding the ball", e["ball_avoiding"].get<std::string>());
    row(out, "common complements", e["common_complement"].get<std::string>());
  }
  row(out, "bound (common complements)", rat(j["bound_cc"]));
  row(out, "bound (ball)", rat(j["bound_ball"]));
  row(out, "limit q -> inf", rat(j["asymptotic_q"]["limit"]) + ", density is " + j["asymptotic_q"]["order"].get<std::string>());
  if (!j["asymptotic_q_bound"].is_null()) row(out, "limsup q -> inf <=", rat(j["asymptotic_q_bound"]));
  if (!j["asymptotic_m"].is_null()) {
    const auto& b = j["asymptotic_m"];
    out << "limsup m -> inf, " << b["truncation"].get<std::string>() << " factors, certified enclosures:\n";
    row(out, "phi(1/q)", iv(b["phi"]));
    row(out, "antrobus-type bound", iv(b["antrobus_bound"]));
    row(out, "common-complement bound", iv(b["common_complement_bound"]));
    row(out, "partition bound", rat(b["half_bound"]));
  }
  return out.str();
}

std::string verify_text(const Json& j) {
  std::ostringstream out;
  for (const auto& c : j["checks"]) {
    out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << ": " << c["detail"].get<std::string>() << "\n";
    if (!c["counterexample"].is_null()) {
      const auto& ex = c["counterexample"];
      out << "  case: " << ex["input"].get<std::string>() << "\n";
      out << "  expected: " << ex["expected"].get<std::string>() << "\n";
      out << "  actual: " << ex["actual"].get<std::string>() << "\n";
    }
  }
  out << (j["passed"].get<bool>() ? "all checks passed" : "verification FAILED") << " (level " << j["level"].get<std::string>() << ")\n";
  return out.str();
}

std::vector<std::string> mrd_comments(const MrdConstruction& c, std::size_t d) {
  std::vector<std::string> out;
  out.push_back("MRD code, d = " + std::to_string(d) + ", dim = " + std::to_string(c.code.dim()));
  out.push_back("extension field: " + c.top_field);
  std::string basis = "basis:";
  for (const auto& b : c.basis) basis += " " + b;
  std::string dual = "dual basis:";
  for (const auto& b : c.dual_basis) dual += " " + b;
  out.push_back(basis);
  out.push_back(dual);
  return out;
}

}  // namespace rankmetric
