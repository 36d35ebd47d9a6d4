#ifndef BEZOUT_PLOT_HPP
#define BEZOUT_PLOT_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bezout/errors.hpp"
#include "bezout/mpoly.hpp"
#include "bezout/numeric.hpp"

namespace bezout {

/// Affine chart of the projective plane: the named coordinate is set to 1
/// and the other two become the horizontal and vertical axes.
enum class Slice { Z, Y, X };

inline Slice parse_slice(const std::string& s) {
  if (s == "z=1") return Slice::Z;
  if (s == "y=1") return Slice::Y;
  if (s == "x=1") return Slice::X;
  throw UsageError("slice must be one of z=1, y=1, x=1 (got '" + s + "')");
}

inline std::string slice_name(Slice s) {
  switch (s) {
    case Slice::Z: return "z=1";
    case Slice::Y: return "y=1";
    case Slice::X: return "x=1";
  }
  return {};
}

/// Indices (into x, y, z) of the fixed, horizontal and vertical coordinates.
inline std::array<int, 3> slice_axes(Slice s) {
  switch (s) {
    case Slice::Z: return {2, 0, 1};
    case Slice::Y: return {1, 0, 2};
    case Slice::X: return {0, 1, 2};
  }
  return {2, 0, 1};
}

struct PlotRange {
  double umin = -2, umax = 2, vmin = -2, vmax = 2;
};

inline PlotRange parse_range(const std::string& s) {
  PlotRange r;
  double* slots[4] = {&r.umin, &r.umax, &r.vmin, &r.vmax};
  std::size_t start = 0;
  for (int i = 0; i < 4; ++i) {
    const std::size_t end = i < 3 ? s.find(':', start) : s.size();
    if (end == std::string::npos) throw UsageError("range must look like xmin:xmax:ymin:ymax");
    const std::string part = s.substr(start, end - start);
    try {
      std::size_t used = 0;
      *slots[i] = std::stod(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("bad number '" + part + "' in range");
    }
    start = end + 1;
  }
  if (!(r.umin < r.umax) || !(r.vmin < r.vmax)) throw UsageError("range bounds must be increasing");
  return r;
}

/// 6 significant digits, shortest form.
inline std::string fmt6(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

/// Double-precision evaluator of a form restricted to a slice.
class SliceFunction {
 public:
  SliceFunction(const MPoly& F, Slice s) {
    const auto ax = slice_axes(s);
    const BigRat scale = F.max_abs_coeff().inverse();
    for (const auto& [m, c] : F.terms()) terms_.push_back({(c * scale).to_double(), m.e[ax[1]], m.e[ax[2]]});
  }
  double operator()(double u, double v) const {
    double acc = 0;
    for (const auto& t : terms_) acc += t.c * std::pow(u, t.i) * std::pow(v, t.j);
    return acc;
  }

 private:
  struct Term {
    double c;
    int i, j;
  };
  std::vector<Term> terms_;
};

struct Segment {
  double u0, v0, u1, v1;
};

/// Zero set of f on an n x n cell grid by marching squares; saddles are
/// resolved with the cell-centre value.
inline std::vector<Segment> marching_squares(const SliceFunction& f, const PlotRange& r, int n) {
  if (n < 2) throw UsageError("grid must be at least 2");
  const double du = (r.umax - r.umin) / n, dv = (r.vmax - r.vmin) / n;
  std::vector<double> val(static_cast<std::size_t>(n + 1) * (n + 1));
  auto at = [&](int i, int j) -> double& { return val[static_cast<std::size_t>(j) * (n + 1) + i]; };
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) at(i, j) = f(r.umin + i * du, r.vmin + j * dv);

  std::vector<Segment> out;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double u = r.umin + i * du, v = r.vmin + j * dv;
      // corners: 0 (u,v), 1 (u+du,v), 2 (u+du,v+dv), 3 (u,v+dv)
      const std::array<double, 4> c{at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
      const std::array<std::pair<double, double>, 4> p{
          {{u, v}, {u + du, v}, {u + du, v + dv}, {u, v + dv}}};
      int mask = 0;
      for (int k = 0; k < 4; ++k)
        if (c[k] >= 0) mask |= 1 << k;
      if (mask == 0 || mask == 15) continue;
      auto edge = [&](int e) {
        const int a = e, b = (e + 1) % 4;
        const double t = c[a] == c[b] ? 0.5 : c[a] / (c[a] - c[b]);
        return std::pair<double, double>{p[a].first + t * (p[b].first - p[a].first),
                                         p[a].second + t * (p[b].second - p[a].second)};
      };
      auto seg = [&](int e0, int e1) {
        const auto a = edge(e0), b = edge(e1);
        out.push_back({a.first, a.second, b.first, b.second});
      };
      // edge k joins corner k and corner k+1
      switch (mask) {
        case 1: case 14: seg(3, 0); break;
        case 2: case 13: seg(0, 1); break;
        case 3: case 12: seg(3, 1); break;
        case 4: case 11: seg(1, 2); break;
        case 6: case 9: seg(0, 2); break;
        case 7: case 8: seg(2, 3); break;
        case 5: case 10: {
          const bool centre = f(u + du / 2, v + dv / 2) >= 0;
          if ((mask == 5) == centre) {
            seg(0, 1);
            seg(2, 3);
          } else {
            seg(3, 0);
            seg(1, 2);
          }
          break;
        }
        default: break;
      }
    }
  }
  return out;
}

struct PlotMarker {
  double u, v;
  std::int64_t multiplicity;
};

/// Real points of the list visible in the slice, with multiplicities summed
/// over coinciding points.
inline std::vector<PlotMarker> slice_markers(const std::vector<ApproxPoint>& pts, Slice s, const PlotRange& r) {
  const auto ax = slice_axes(s);
  std::vector<PlotMarker> out;
  for (const auto& p : pts) {
    if (!p.is_real()) continue;
    const std::array<double, 3> c{p.x.re.convert_to<double>(), p.y.re.convert_to<double>(),
                                  p.z.re.convert_to<double>()};
    if (c[ax[0]] == 0) continue;
    const double u = c[ax[1]] / c[ax[0]], v = c[ax[2]] / c[ax[0]];
    if (u < r.umin || u > r.umax || v < r.vmin || v > r.vmax) continue;
    bool merged = false;
    for (auto& m : out)
      if (std::abs(m.u - u) <= 1e-9 * (1 + std::abs(u)) && std::abs(m.v - v) <= 1e-9 * (1 + std::abs(v))) {
        m.multiplicity += p.multiplicity;
        merged = true;
        break;
      }
    if (!merged) out.push_back({u, v, p.multiplicity});
  }
  return out;
}

struct PlotInput {
  MPoly a, b;
  Slice slice = Slice::Z;
  PlotRange range;
  int grid = 512;
  std::vector<ApproxPoint> points;
};

struct PlotResult {
  std::string svg;
  std::vector<PlotMarker> markers;
  std::size_t segments_a = 0, segments_b = 0;
  std::vector<std::string> warnings;
};

inline PlotResult render_svg(const PlotInput& in) {
  constexpr double kSize = 600, kMargin = 50;
  const PlotRange& r = in.range;
  const auto ax = slice_axes(in.slice);
  static constexpr const char* names[3] = {"x", "y", "z"};
  auto sx = [&](double u) { return kMargin + (u - r.umin) / (r.umax - r.umin) * kSize; };
  auto sy = [&](double v) { return kMargin + (r.vmax - v) / (r.vmax - r.vmin) * kSize; };

  PlotResult res;
  const auto seg_a = marching_squares(SliceFunction(in.a, in.slice), r, in.grid);
  const auto seg_b = marching_squares(SliceFunction(in.b, in.slice), r, in.grid);
  res.segments_a = seg_a.size();
  res.segments_b = seg_b.size();
  res.markers = slice_markers(in.points, in.slice, r);
  if (seg_a.empty() && seg_b.empty()) res.warnings.emplace_back("no part of either curve is visible in the window");

  std::ostringstream os;
  const std::string total = fmt6(kSize + 2 * kMargin);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total << "\" height=\"" << total
     << "\" viewBox=\"0 0 " << total << " " << total << "\">\n";
  os << "<title>slice " << slice_name(in.slice) << "</title>\n";
  os << "<rect x=\"" << fmt6(kMargin) << "\" y=\"" << fmt6(kMargin) << "\" width=\"" << fmt6(kSize)
     << "\" height=\"" << fmt6(kSize) << "\" fill=\"white\" stroke=\"black\"/>\n";

  os << "<g class=\"axes\" stroke=\"#999\" stroke-width=\"1\">\n";
  if (r.vmin <= 0 && 0 <= r.vmax)
    os << "<line x1=\"" << fmt6(sx(r.umin)) << "\" y1=\"" << fmt6(sy(0)) << "\" x2=\"" << fmt6(sx(r.umax))
       << "\" y2=\"" << fmt6(sy(0)) << "\"/>\n";
  if (r.umin <= 0 && 0 <= r.umax)
    os << "<line x1=\"" << fmt6(sx(0)) << "\" y1=\"" << fmt6(sy(r.vmin)) << "\" x2=\"" << fmt6(sx(0))
       << "\" y2=\"" << fmt6(sy(r.vmax)) << "\"/>\n";
  os << "</g>\n";
  os << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"14\">\n";
  os << "<text x=\"" << fmt6(kMargin + kSize / 2) << "\" y=\"" << fmt6(kMargin + kSize + 35)
     << "\" text-anchor=\"middle\">" << names[ax[1]] << "</text>\n";
  os << "<text x=\"" << fmt6(kMargin - 35) << "\" y=\"" << fmt6(kMargin + kSize / 2) << "\">" << names[ax[2]]
     << "</text>\n";
  os << "<text x=\"" << fmt6(kMargin) << "\" y=\"" << fmt6(kMargin + kSize + 20) << "\">" << fmt6(r.umin)
     << "</text>\n";
  os << "<text x=\"" << fmt6(kMargin + kSize) << "\" y=\"" << fmt6(kMargin + kSize + 20)
     << "\" text-anchor=\"end\">" << fmt6(r.umax) << "</text>\n";
  os << "<text x=\"" << fmt6(kMargin - 5) << "\" y=\"" << fmt6(kMargin + kSize) << "\" text-anchor=\"end\">"
     << fmt6(r.vmin) << "</text>\n";
  os << "<text x=\"" << fmt6(kMargin - 5) << "\" y=\"" << fmt6(kMargin + 10) << "\" text-anchor=\"end\">"
     << fmt6(r.vmax) << "</text>\n";
  os << "<text x=\"" << fmt6(kMargin) << "\" y=\"" << fmt6(kMargin - 30) << "\" fill=\"#1f5fbf\">A: "
     << in.a.to_string() << " = 0</text>\n";
  os << "<text x=\"" << fmt6(kMargin) << "\" y=\"" << fmt6(kMargin - 12) << "\" fill=\"#c0392b\">B: "
     << in.b.to_string() << " = 0</text>\n";
  os << "</g>\n";

  auto path = [&](const std::vector<Segment>& segs, const char* cls, const char* colour) {
    os << "<path class=\"" << cls << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" d=\"";
    bool first = true;
    for (const auto& s : segs) {
      if (!first) os << ' ';
      os << 'M' << fmt6(sx(s.u0)) << ',' << fmt6(sy(s.v0)) << 'L' << fmt6(sx(s.u1)) << ',' << fmt6(sy(s.v1));
      first = false;
    }
    os << "\"/>\n";
  };
  path(seg_a, "curve-a", "#1f5fbf");
  path(seg_b, "curve-b", "#c0392b");

  os << "<g class=\"markers\" font-family=\"sans-serif\" font-size=\"14\">\n";
  for (const auto& m : res.markers) {
    os << "<g class=\"marker\" data-mult=\"" << m.multiplicity << "\" data-u=\"" << fmt6(m.u) << "\" data-v=\""
       << fmt6(m.v) << "\">";
    os << "<circle cx=\"" << fmt6(sx(m.u)) << "\" cy=\"" << fmt6(sy(m.v)) << "\" r=\"5\" fill=\"black\"/>";
    os << "<text x=\"" << fmt6(sx(m.u) + 8) << "\" y=\"" << fmt6(sy(m.v) - 8) << "\">" << m.multiplicity
       << "</text></g>\n";
  }
  os << "</g>\n</svg>\n";
  res.svg = os.str();
  return res;
}

}  // namespace bezout

#endif  // BEZOUT_PLOT_HPP
