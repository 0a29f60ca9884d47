#include "kla2/alcove.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace kla2 {

namespace {
int vertex_type(LatticePoint p) {
  long r = (p.first + 2 * p.second) % 3;
  if (r < 0) r += 3;
  return static_cast<int>(r);
}
}  // namespace

Triangle::Triangle() : v_{LatticePoint{0, 0}, LatticePoint{1, 0}, LatticePoint{0, 1}} {}

Triangle Triangle::reflect(Gen s) const {
  int t = s.index() % 3;
  Triangle r = *this;
  const LatticePoint& b = v_[static_cast<size_t>((t + 1) % 3)];
  const LatticePoint& c = v_[static_cast<size_t>((t + 2) % 3)];
  r.v_[static_cast<size_t>(t)] = {b.first + c.first - v_[static_cast<size_t>(t)].first,
                                  b.second + c.second - v_[static_cast<size_t>(t)].second};
  return r;
}

bool Triangle::points_up() const {
  const auto& [p0, p1, p2] = v_;
  long det = (p1.first - p0.first) * (p2.second - p0.second) -
             (p1.second - p0.second) * (p2.first - p0.first);
  return det > 0;
}

LatticePoint Triangle::barycenter3() const {
  return {v_[0].first + v_[1].first + v_[2].first,
          v_[0].second + v_[1].second + v_[2].second};
}

std::array<LatticePoint, 3> Triangle::sorted_vertices() const {
  std::array<LatticePoint, 3> s = v_;
  std::sort(s.begin(), s.end());
  return s;
}

Triangle elt_to_triangle(const Elt& x) {
  Triangle t;
  for (Gen s : to_canonical_word(x)) t = t.reflect(s);
  return t;
}

namespace {

constexpr double kRoot3Half = 0.8660254037844386;

struct Pt {
  double x, y;
};

Pt to_plane(LatticePoint p) {
  return {p.first + 0.5 * p.second, kRoot3Half * p.second};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

const char* kEdgeColor[3] = {"#1f4fd8", "#d82a2a", "#1fa83c"};  // types 0,1,2 = s3,s1,s2

std::string gray_fill(int level, int levels) {
  // innermost (highest level) lightest, outer rings darker
  int shade = 225 - (levels > 1 ? (levels - 1 - level) * (110 / (levels - 1)) : 0);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", shade, shade, shade);
  return buf;
}

}  // namespace

std::string interval_svg(const Elt& x, const std::vector<Shading>& nested) {
  // collect (element, gray level); later shadings overwrite earlier ones
  std::vector<Shading> layers{{x, 0}};
  layers.insert(layers.end(), nested.begin(), nested.end());
  int max_level = 0;
  for (const Shading& s : layers) max_level = std::max(max_level, s.gray_level);

  std::map<std::array<LatticePoint, 3>, std::pair<Triangle, int>> shaded;
  for (const Shading& s : layers) {
    std::vector<Elt> iv = lower_interval(s.elt);
    std::vector<std::pair<std::pair<long, std::string>, Elt>> ordered;
    ordered.reserve(iv.size());
    for (const Elt& y : iv)
      ordered.push_back({{length(y), canonical_digits(y)}, y});
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, y] : ordered) {
      Triangle t = elt_to_triangle(y);
      shaded[t.sorted_vertices()] = {t, s.gray_level};
    }
  }

  double minx = 1e9, miny = 1e9, maxx = -1e9, maxy = -1e9;
  for (const auto& [verts, tl] : shaded)
    for (const LatticePoint& p : verts) {
      Pt q = to_plane(p);
      minx = std::min(minx, q.x);
      maxx = std::max(maxx, q.x);
      miny = std::min(miny, q.y);
      maxy = std::max(maxy, q.y);
    }
  const double scale = 40.0, margin = 20.0;
  auto X = [&](double v) { return margin + scale * (v - minx); };
  auto Y = [&](double v) { return margin + scale * (maxy - v); };  // flip y for SVG

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << fmt(2 * margin + scale * (maxx - minx)) << "\" height=\""
     << fmt(2 * margin + scale * (maxy - miny)) << "\">\n";
  for (const auto& [verts, tl] : shaded) {
    os << "  <polygon class=\"alcove\" fill=\"" << gray_fill(tl.second, max_level + 1)
       << "\" stroke=\"none\" points=\"";
    bool first = true;
    for (const LatticePoint& p : verts) {
      Pt q = to_plane(p);
      if (!first) os << " ";
      first = false;
      os << fmt(X(q.x)) << "," << fmt(Y(q.y));
    }
    os << "\"/>\n";
  }
  // edges on top of fills; each edge colored by the type of its opposite vertex
  std::set<std::array<long, 5>> emitted;  // {p1,p2 sorted, type} dedup
  for (const auto& [verts, tl] : shaded) {
    const Triangle& t = tl.first;
    for (int type = 0; type < 3; ++type) {
      LatticePoint a = t.vertex((type + 1) % 3);
      LatticePoint b = t.vertex((type + 2) % 3);
      if (std::make_pair(b.first, b.second) < std::make_pair(a.first, a.second)) std::swap(a, b);
      if (!emitted.insert({a.first, a.second, b.first, b.second, type}).second) continue;
      Pt pa = to_plane(a), pb = to_plane(b);
      os << "  <line stroke=\"" << kEdgeColor[type] << "\" stroke-width=\"1.5\" x1=\""
         << fmt(X(pa.x)) << "\" y1=\"" << fmt(Y(pa.y)) << "\" x2=\"" << fmt(X(pb.x))
         << "\" y2=\"" << fmt(Y(pb.y)) << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

namespace {

// Side-normal forms on tripled barycenters; they sum to zero and are
// permuted by the dihedral stabilizer of the central vertex.
std::array<long, 3> side_forms(LatticePoint bary3, LatticePoint center) {
  long a = bary3.first - 3 * center.first;
  long b = bary3.second - 3 * center.second;
  return {2 * a + b, -a - 2 * b, b - a};
}

long form_max(LatticePoint bary3, LatticePoint center) {
  auto f = side_forms(bary3, center);
  return std::max({f[0], f[1], f[2]});
}

}  // namespace

VerifyReport region_is_equilateral_triangle(long m) {
  const std::string suite = "region-triangle";
  const std::string par = std::to_string(m);
  std::vector<Elt> iv = lower_interval(theta_elt(m, 0));
  long expected = 6 * (m + 1) * (m + 2) / 2;
  if (static_cast<long>(iv.size()) != expected)
    return VerifyReport::fail(suite, par,
                              "alcove count " + std::to_string(iv.size()) + " != 6*sum(i) = " +
                                  std::to_string(expected));

  // the center is the vertex shared by all alcoves of <= theta(0,0)
  std::map<LatticePoint, int> incidence;
  for (const Elt& y : lower_interval(theta_elt(0, 0)))
    for (const LatticePoint& p : elt_to_triangle(y).sorted_vertices()) ++incidence[p];
  LatticePoint center{0, 0};
  bool found = false;
  for (const auto& [p, c] : incidence)
    if (c == 6) { center = p; found = true; }
  if (!found) return VerifyReport::fail(suite, par, "no central vertex of incidence 6");

  std::set<LatticePoint> barys;
  long c = 0;
  for (const Elt& y : iv) {
    LatticePoint b3 = elt_to_triangle(y).barycenter3();
    barys.insert(b3);
    if (y == theta_elt(m, 0)) c = form_max(b3, center);
  }
  // sublevel set within a bounding box covering the region
  long R = 3 * (m + 3);
  long inside = 0;
  for (long a = -R; a <= R; ++a)
    for (long b = -R; b <= R; ++b) {
      for (int up = 0; up < 2; ++up) {
        LatticePoint b3 = up ? LatticePoint{3 * a + 1, 3 * b + 1}
                             : LatticePoint{3 * a + 2, 3 * b + 2};
        if (form_max(b3, center) <= c) {
          ++inside;
          if (!barys.count(b3))
            return VerifyReport::fail(suite, par, "alcove inside the triangle missing from the interval");
        }
      }
    }
  if (inside != static_cast<long>(iv.size()))
    return VerifyReport::fail(suite, par,
                              "triangle holds " + std::to_string(inside) + " alcoves, interval has " +
                                  std::to_string(iv.size()));
  return VerifyReport::ok(suite, par);
}

VerifyReport verify_hexagon_geometry(long m, long n) {
  const std::string suite = "hexagon-geometry";
  const std::string par = std::to_string(m) + "," + std::to_string(n);
  std::set<std::array<LatticePoint, 3>> inner, outer;
  for (const Elt& y : lower_interval(theta_elt(m, n))) inner.insert(elt_to_triangle(y).sorted_vertices());
  for (const Elt& y : lower_interval(theta_elt(m + 1, n + 1))) outer.insert(elt_to_triangle(y).sorted_vertices());
  std::set<std::array<LatticePoint, 3>> diff;
  for (const auto& k : outer)
    if (!inner.count(k)) diff.insert(k);

  std::map<LatticePoint, std::set<std::array<LatticePoint, 3>>> by_vertex;
  for (const auto& k : diff)
    for (const LatticePoint& p : k) by_vertex[p].insert(k);

  for (int color = 0; color < 3; ++color) {
    std::set<std::array<LatticePoint, 3>> covered;
    bool ok = true;
    for (const auto& [p, ks] : by_vertex) {
      if (vertex_type(p) != color || ks.size() != 6) continue;
      for (const auto& k : ks) {
        if (covered.count(k)) { ok = false; break; }
        covered.insert(k);
      }
      if (!ok) break;
    }
    if (ok && covered == diff) return VerifyReport::ok(suite, par);
  }
  return VerifyReport::fail(suite, par, "difference set is not a union of disjoint single-color stars");
}

}  // namespace kla2
