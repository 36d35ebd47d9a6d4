// Text and JSON rendering for the command-line tool.
#ifndef BEZOUT_TOOLS_REPORT_HPP
#define BEZOUT_TOOLS_REPORT_HPP

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bezout/bezout.hpp"
#include "json.hpp"

namespace bezout::cli {

using Json = nlohmann::ordered_json;

struct Style {
  bool colour = false;

  std::string ok(const std::string& s) const { return colour ? "\033[32m" + s + "\033[0m" : s; }
  std::string bad(const std::string& s) const { return colour ? "\033[31m" + s + "\033[0m" : s; }
  std::string verdict(bool pass) const { return pass ? ok("OK") : bad("FAIL"); }
};

/// %.Ng, never "-0".
inline std::string num(double v, int digits = 12) {
  if (v == 0) v = 0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline std::string complex_text(const Complex& c) {
  const auto [re, im] = c.to_double();
  if (im == 0) return num(re);
  std::string s = re == 0 ? std::string() : num(re);
  if (im < 0)
    s += "-";
  else if (!s.empty())
    s += "+";
  const double a = im < 0 ? -im : im;
  if (a != 1) s += num(a);
  return s + "i";
}

inline std::string point_text(const ApproxPoint& p) {
  return "(" + complex_text(p.x) + ", " + complex_text(p.y) + ", " + complex_text(p.z) + ")";
}

struct VerifyOutcome {
  bool bezout = false;
  int on_both = 0;
  int cycles = 0;
  std::optional<GaloisCycle> off_curve;
  OracleReport oracle;

  bool ok() const { return bezout && !off_curve && oracle.verdict != OracleReport::Verdict::Fail; }
};

inline VerifyOutcome run_verification(const IntersectionResult& r, std::uint64_t seed) {
  VerifyOutcome v;
  v.bezout = bezout_check(r.cycle, r.a.degree(), r.b.degree());
  for (const auto& [gc, k] : r.cycle.entries()) {
    ++v.cycles;
    if (on_curve(r.a, gc) && on_curve(r.b, gc))
      ++v.on_both;
    else if (!v.off_curve)
      v.off_curve = gc;
  }
  if (!r.a.is_constant() && !r.b.is_constant()) v.oracle = resultant_oracle(r.a, r.b, seed);
  return v;
}

inline std::string matrix_text(const IntMatrix3& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < 3; ++j) os << (j ? "," : "") << m[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

inline std::string bezout_line(const IntersectionResult& r, const Style& st) {
  const bool ok = bezout_check(r.cycle, r.a.degree(), r.b.degree());
  return "# Bezout: " + std::to_string(r.cycle.size()) + " = " + std::to_string(r.a.degree()) + "*" +
         std::to_string(r.b.degree()) + " " + st.verdict(ok);
}

inline std::string text_report(const IntersectionResult& r, const std::optional<std::vector<ApproxPoint>>& pts,
                               const std::optional<VerifyOutcome>& v, unsigned precision, const Style& st) {
  std::ostringstream os;
  for (const auto& w : r.warnings) os << "# warning: " << w << "\n";
  os << r.cycle.to_string() << "\n";
  os << bezout_line(r, st) << "\n";
  if (v) {
    os << "# on curves: " << v->on_both << "/" << v->cycles << " cycles lie on both curves "
       << st.verdict(!v->off_curve) << "\n";
    if (v->off_curve) os << "#   off curve: " << v->off_curve->to_string() << "\n";
    const auto& o = v->oracle;
    os << "# resultant oracle: ";
    if (o.verdict == OracleReport::Verdict::Pass)
      os << st.ok("pass");
    else if (o.verdict == OracleReport::Verdict::Fail)
      os << st.bad("fail");
    else
      os << "inconclusive";
    os << (o.sheared ? " (coordinates changed by " + matrix_text(o.shear) + ")" : std::string(" (original coordinates)"))
       << "\n";
    if (!o.message.empty()) os << "#   " << o.message << "\n";
  }
  if (pts) {
    os << "# points (" << pts->size() << " distinct, precision " << precision << "):\n";
    for (const auto& p : *pts) {
      os << point_text(p);
      if (p.multiplicity != 1) os << "  x" << p.multiplicity;
      if (p.residual_a) os << "  |A|=" << num(*p.residual_a, 3) << " |B|=" << num(*p.residual_b, 3);
      os << "\n";
    }
  }
  return os.str();
}

inline Json cycle_json(const GaloisCycle& gc, std::int64_t k) {
  Json j;
  switch (gc.kind()) {
    case GaloisCycle::Kind::PInf: j["type"] = "Pinf"; break;
    case GaloisCycle::Kind::C0: j["type"] = "C0"; break;
    case GaloisCycle::Kind::C1: j["type"] = "C1"; break;
  }
  j["mult"] = k;
  if (gc.kind() == GaloisCycle::Kind::C0) j["f"] = gc.f_string();
  if (gc.kind() == GaloisCycle::Kind::C1) {
    j["g"] = gc.g_string();
    j["h"] = gc.h_string();
  }
  j["size"] = gc.size();
  return j;
}

inline Json complex_json(const Complex& c) {
  const auto [re, im] = c.to_double();
  return Json::array({re == 0 ? 0.0 : re, im == 0 ? 0.0 : im});
}

inline Json json_report(const IntersectionResult& r, const std::optional<std::vector<ApproxPoint>>& pts,
                        const std::optional<VerifyOutcome>& v) {
  Json j;
  j["degA"] = r.a.degree();
  j["degB"] = r.b.degree();
  j["bezout"] = r.bezout_number();
  j["cycles"] = Json::array();
  for (const auto& [gc, k] : r.cycle.entries()) j["cycles"].push_back(cycle_json(gc, k));
  if (pts) {
    j["points"] = Json::array();
    for (const auto& p : *pts) {
      Json q;
      q["x"] = complex_json(p.x);
      q["y"] = complex_json(p.y);
      q["z"] = p.z.re == 0 ? 0 : 1;
      q["mult"] = p.multiplicity;
      j["points"].push_back(q);
    }
  }
  if (v) {
    Json q;
    q["bezout"] = v->bezout;
    q["onCurves"] = !v->off_curve;
    q["oracle"] = verdict_name(v->oracle.verdict);
    q["sheared"] = v->oracle.sheared;
    if (!v->oracle.message.empty()) q["message"] = v->oracle.message;
    j["verify"] = q;
  }
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

}  // namespace bezout::cli

#endif  // BEZOUT_TOOLS_REPORT_HPP
