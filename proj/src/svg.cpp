#include "gfan/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "gfan/error.hpp"

namespace gfan {

PlaneSpec parse_plane(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "plane needs the form a,b,c=d: " + text);
  PlaneSpec p;
  try {
    std::stringstream lhs(text.substr(0, eq));
    std::string item;
    while (std::getline(lhs, item, ',')) p.normal.push_back(Rational(item));
    p.offset = Rational(text.substr(eq + 1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad number in plane: " + text);
  }
  if (p.normal.empty() || std::all_of(p.normal.begin(), p.normal.end(), [](const Rational& x) { return x == 0; }))
    throw Error(ErrorCode::ParseError, "plane normal is zero: " + text);
  return p;
}

namespace {

using Vec3 = std::array<double, 3>;

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Vec3 normalized(Vec3 a) {
  double l = std::sqrt(dot3(a, a));
  for (auto& x : a) x /= l;
  return a;
}
Vec3 to_vec3(const QVector& v) {
  return {v[0].convert_to<double>(), v[1].convert_to<double>(), v[2].convert_to<double>()};
}

// Vertex plus the tag of the constraint that produced the edge leaving it
// (-1 for a viewport side).
struct Tagged {
  Point2 p;
  int edge;
};

// Keeps the side c0 + c1 s + c2 t >= 0.
std::vector<Tagged> clip(const std::vector<Tagged>& poly, double c0, double c1, double c2, int tag) {
  std::vector<Tagged> out;
  const std::size_t m = poly.size();
  auto val = [&](const Point2& q) { return c0 + c1 * q.first + c2 * q.second; };
  const double eps = 1e-12;
  for (std::size_t i = 0; i < m; ++i) {
    const Tagged& cur = poly[i];
    const Tagged& nxt = poly[(i + 1) % m];
    double a = val(cur.p), b = val(nxt.p);
    bool ina = a >= -eps, inb = b >= -eps;
    if (ina) out.push_back(cur);
    if (ina != inb) {
      double s = a / (a - b);
      Point2 x{cur.p.first + s * (nxt.p.first - cur.p.first), cur.p.second + s * (nxt.p.second - cur.p.second)};
      // Entering: the new edge continues the old one. Leaving: it runs along the clip line.
      if (ina)
        out.push_back({x, tag});
      else
        out.push_back({x, cur.edge});
    }
  }
  return out;
}

std::pair<long long, long long> snap(const Point2& p) {
  return {std::llround(p.first * 1e6), std::llround(p.second * 1e6)};
}

}  // namespace

FanSlice slice_fan(const ChamberFan& fan, const PlaneSpec& plane, double half_width) {
  if (fan.dim != 3 || plane.normal.size() != 3)
    throw Error(ErrorCode::InvalidArgument, "fan slices need a three-dimensional fan and plane");
  FanSlice out;
  out.half_width = half_width;
  Vec3 n = to_vec3(plane.normal);
  const double d = plane.offset.convert_to<double>();
  Vec3 origin = n;
  for (auto& x : origin) x *= d / dot3(n, n);
  Vec3 helper = std::fabs(n[0]) < 0.9 * std::sqrt(dot3(n, n)) ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  Vec3 u = normalized(cross(n, helper));
  Vec3 v = normalized(cross(n, u));

  std::map<std::pair<std::pair<long long, long long>, std::pair<long long, long long>>, SliceSegment> walls;
  for (std::size_t c = 0; c < fan.chambers.size(); ++c) {
    const double w = half_width;
    std::vector<Tagged> poly{{{-w, -w}, -1}, {{w, -w}, -1}, {{w, w}, -1}, {{-w, w}, -1}};
    const auto& facets = fan.chambers[c].facets();
    for (std::size_t k = 0; k < facets.size() && !poly.empty(); ++k) {
      Vec3 f = to_vec3(facets[k]);
      poly = clip(poly, dot3(f, origin), dot3(f, u), dot3(f, v), static_cast<int>(k));
    }
    if (poly.size() < 3) continue;
    SlicePolygon sp{c, {}};
    for (const auto& t : poly) sp.vertices.push_back(t.p);
    double area = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& a = poly[i].p;
      const auto& b = poly[(i + 1) % poly.size()].p;
      area += a.first * b.second - b.first * a.second;
    }
    if (std::fabs(area) < 1e-9) continue;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i].edge < 0) continue;
      Point2 a = poly[i].p, b = poly[(i + 1) % poly.size()].p;
      auto ka = snap(a), kb = snap(b);
      if (ka == kb) continue;
      if (kb < ka) std::swap(ka, kb);
      walls.emplace(std::make_pair(ka, kb), SliceSegment{a, b});
    }
    out.chambers.push_back(std::move(sp));
  }
  for (auto& [k, s] : walls) out.walls.push_back(s);
  return out;
}

std::string render_svg(const FanSlice& slice, int pixels) {
  static const char* palette[] = {"#4169e1", "#f2798f", "#50c878", "#f4c430", "#9966cc", "#40e0d0", "#ff8c42", "#a0a0a0"};
  const double w = slice.half_width;
  auto px = [&](const Point2& p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", (p.first + w) / (2 * w) * pixels, (w - p.second) / (2 * w) * pixels);
    return std::string(buf);
  };
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << pixels << "\" height=\"" << pixels
    << "\" viewBox=\"0 0 " << pixels << ' ' << pixels << "\">\n";
  for (const auto& c : slice.chambers) {
    s << "  <polygon class=\"chamber\" data-chamber=\"" << c.chamber << "\" fill=\"" << palette[c.chamber % 8]
      << "\" fill-opacity=\"0.45\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < c.vertices.size(); ++i) s << (i ? " " : "") << px(c.vertices[i]);
    s << "\"/>\n";
  }
  for (const auto& e : slice.walls) {
    auto a = px(e.a), b = px(e.b);
    auto ca = a.find(','), cb = b.find(',');
    s << "  <line class=\"wall\" x1=\"" << a.substr(0, ca) << "\" y1=\"" << a.substr(ca + 1) << "\" x2=\""
      << b.substr(0, cb) << "\" y2=\"" << b.substr(cb + 1) << "\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace gfan
