#include "c2i/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "c2i/errors.hpp"

namespace c2i {

namespace {

// Sign of the cross product (b-a) x (c-a). Coordinates are capped at 1e9 so
// the products stay far below the __int128 limit.
int orient(GeoPosition a, GeoPosition b, GeoPosition c) {
  const WideInt v = WideInt(b.x - a.x) * WideInt(c.y - a.y) -
                    WideInt(b.y - a.y) * WideInt(c.x - a.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool in_bbox(GeoPosition p, GeoPosition a, GeoPosition b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool strictly_between_collinear(GeoPosition p, GeoPosition a, GeoPosition b) {
  // p assumed collinear with a-b.
  return in_bbox(p, a, b) && p != a && p != b;
}

}  // namespace

bool position_in_bounds(GeoPosition p) {
  return std::llabs(p.x) <= kCoordLimit && std::llabs(p.y) <= kCoordLimit;
}

WideInt squared_distance(GeoPosition a, GeoPosition b) {
  const WideInt dx = b.x - a.x;
  const WideInt dy = b.y - a.y;
  return dx * dx + dy * dy;
}

double distance_cm(GeoPosition a, GeoPosition b) {
  return std::hypot(double(b.x - a.x), double(b.y - a.y));
}

std::int64_t isqrt_floor(WideInt v) {
  if (v < 0) throw InvariantViolation("isqrt_floor: negative input");
  if (v == 0) return 0;
  auto r = std::int64_t(std::sqrt(double(v)));
  while (WideInt(r) * r > v) --r;
  while (WideInt(r + 1) * (r + 1) <= v) ++r;
  return r;
}

Heading Heading::from_decidegrees(long long deci) {
  Heading h;
  long long m = deci % 3600;
  if (m < 0) m += 3600;
  h.deci_ = int(m);
  return h;
}

Heading Heading::from_degrees(double deg) {
  if (!std::isfinite(deg)) throw InvariantViolation("heading: non-finite degrees");
  return from_decidegrees(std::llround(deg * 10.0));
}

int heading_difference_deci(Heading a, Heading b) {
  int d = std::abs(a.decidegrees() - b.decidegrees());
  return std::min(d, 3600 - d);
}

double heading_difference_deg(Heading a, Heading b) {
  return heading_difference_deci(a, b) / 10.0;
}

Heading segment_heading(GeoPosition from, GeoPosition to) {
  if (from == to) throw InvariantViolation("segment_heading: zero-length segment");
  // atan2(east, north) gives clockwise-from-north directly.
  const double rad = std::atan2(double(to.x - from.x), double(to.y - from.y));
  return Heading::from_degrees(rad * 180.0 / std::numbers::pi);
}

Polyline::Polyline(std::vector<GeoPosition> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw InvariantViolation("polyline: needs at least 2 points");
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    if (points_[i] == points_[i + 1])
      throw InvariantViolation("polyline: consecutive duplicate point");
    if (!position_in_bounds(points_[i]))
      throw InvariantViolation("polyline: point out of bounds");
  }
  if (!position_in_bounds(points_.back()))
    throw InvariantViolation("polyline: point out of bounds");
}

double Polyline::length_cm() const {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < points_.size(); ++i)
    total += distance_cm(points_[i], points_[i + 1]);
  return total;
}

Area make_circle(GeoPosition center, Coord radius_cm) {
  if (!position_in_bounds(center)) throw InvariantViolation("circle: center out of bounds");
  if (radius_cm <= 0) throw InvariantViolation("circle: radius must be positive");
  return Circle{center, radius_cm};
}

Area make_polygon(std::vector<GeoPosition> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw InvariantViolation("polygon: needs at least 3 vertices");
  for (const auto& v : vertices)
    if (!position_in_bounds(v)) throw InvariantViolation("polygon: vertex out of bounds");
  for (std::size_t i = 0; i < n; ++i)
    if (vertices[i] == vertices[(i + 1) % n])
      throw InvariantViolation("polygon: degenerate edge");
  // Simplicity: non-adjacent edges must not touch; adjacent edges must meet
  // only at the shared vertex (no collinear fold-back).
  for (std::size_t i = 0; i < n; ++i) {
    const GeoPosition a1 = vertices[i];
    const GeoPosition a2 = vertices[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const GeoPosition b1 = vertices[j];
      const GeoPosition b2 = vertices[(j + 1) % n];
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        const GeoPosition shared = (j == i + 1) ? a2 : a1;
        const GeoPosition tip_a = (j == i + 1) ? a1 : a2;
        const GeoPosition tip_b = (j == i + 1) ? b2 : b1;
        if (orient(tip_a, shared, tip_b) == 0 &&
            (WideInt(tip_a.x - shared.x) * (tip_b.x - shared.x) +
             WideInt(tip_a.y - shared.y) * (tip_b.y - shared.y)) > 0)
          throw InvariantViolation("polygon: collinear fold-back at vertex");
      } else if (segments_intersect(a1, a2, b1, b2)) {
        throw InvariantViolation("polygon: self-intersection");
      }
    }
  }
  return Polygon{std::move(vertices)};
}

bool area_equal(const Area& a, const Area& b) { return a == b; }

bool on_segment(GeoPosition p, GeoPosition a, GeoPosition b) {
  return orient(a, b, p) == 0 && in_bbox(p, a, b);
}

bool segments_intersect(GeoPosition a1, GeoPosition a2, GeoPosition b1, GeoPosition b2) {
  const int d1 = orient(b1, b2, a1);
  const int d2 = orient(b1, b2, a2);
  const int d3 = orient(a1, a2, b1);
  const int d4 = orient(a1, a2, b2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && in_bbox(a1, b1, b2)) return true;
  if (d2 == 0 && in_bbox(a2, b1, b2)) return true;
  if (d3 == 0 && in_bbox(b1, a1, a2)) return true;
  if (d4 == 0 && in_bbox(b2, a1, a2)) return true;
  return false;
}

namespace {

// Does the open segment (p1,p2) meet the closed segment [q1,q2]?
bool open_segment_blocked(GeoPosition p1, GeoPosition p2, GeoPosition q1, GeoPosition q2) {
  const int d1 = orient(q1, q2, p1);
  const int d2 = orient(q1, q2, p2);
  const int d3 = orient(p1, p2, q1);
  const int d4 = orient(p1, p2, q2);

  if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
    // All collinear: compare 1-D parameters along p1->p2. The sight interval
    // is open (0, L2), the obstruction interval is closed.
    const WideInt dx = p2.x - p1.x;
    const WideInt dy = p2.y - p1.y;
    const WideInt len2 = dx * dx + dy * dy;
    const WideInt s1 = dx * (q1.x - p1.x) + dy * (q1.y - p1.y);
    const WideInt s2 = dx * (q2.x - p1.x) + dy * (q2.y - p1.y);
    const WideInt lo = std::min(s1, s2);
    const WideInt hi = std::max(s1, s2);
    return lo < len2 && hi > 0;
  }
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;  // proper crossing, interior to both
  // Obstruction endpoint lying strictly inside the sight segment blocks.
  if (d3 == 0 && strictly_between_collinear(q1, p1, p2)) return true;
  if (d4 == 0 && strictly_between_collinear(q2, p1, p2)) return true;
  // Contacts at p1/p2 themselves (d1 == 0 or d2 == 0) are outside the open segment.
  return false;
}

}  // namespace

ObstructionSegment make_obstruction(GeoPosition a, GeoPosition b) {
  if (a == b) throw InvariantViolation("obstruction: endpoints must differ");
  if (!position_in_bounds(a) || !position_in_bounds(b))
    throw InvariantViolation("obstruction: endpoint out of bounds");
  return ObstructionSegment{a, b};
}

bool line_of_sight(GeoPosition a, GeoPosition b,
                   std::span<const ObstructionSegment> obstructions) {
  if (a == b) return true;
  for (const auto& wall : obstructions)
    if (open_segment_blocked(a, b, wall.a, wall.b)) return false;
  return true;
}

bool contains(const Area& area, GeoPosition p) {
  if (const auto* c = std::get_if<Circle>(&area)) {
    return squared_distance(p, c->center) <= WideInt(c->radius_cm) * c->radius_cm;
  }
  const auto& poly = std::get<Polygon>(area);
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i)
    if (on_segment(p, v[i], v[(i + 1) % n])) return true;
  // Even-odd rule with a ray towards +x; the half-open vertex rule plus the
  // boundary pre-check above keeps every case exact in integer arithmetic.
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const GeoPosition a = v[i];
    const GeoPosition b = v[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      // x of the crossing minus p.x has the sign of num/(b.y-a.y).
      const WideInt num = WideInt(a.x - p.x) * (b.y - a.y) +
                          WideInt(p.y - a.y) * (b.x - a.x);
      if (b.y - a.y > 0 ? num > 0 : num < 0) inside = !inside;
    }
  }
  return inside;
}

double point_segment_distance(GeoPosition p, GeoPosition a, GeoPosition b) {
  if (on_segment(p, a, b)) return 0.0;
  const WideInt dx = b.x - a.x;
  const WideInt dy = b.y - a.y;
  const WideInt len2 = dx * dx + dy * dy;
  if (len2 == 0) return distance_cm(p, a);
  const WideInt dot = dx * (p.x - a.x) + dy * (p.y - a.y);
  if (dot <= 0) return distance_cm(p, a);
  if (dot >= len2) return distance_cm(p, b);
  const WideInt cross = dx * (p.y - a.y) - dy * (p.x - a.x);
  return std::sqrt(double(cross) * double(cross) / double(len2));
}

double distance_to_polyline(GeoPosition p, const Polyline& line) {
  const auto& pts = line.points();
  double best = point_segment_distance(p, pts[0], pts[1]);
  for (std::size_t i = 1; i + 1 < pts.size(); ++i)
    best = std::min(best, point_segment_distance(p, pts[i], pts[i + 1]));
  return best;
}

std::size_t nearest_segment_index(GeoPosition p, const Polyline& line) {
  const auto& pts = line.points();
  std::size_t best_idx = 0;
  double best = point_segment_distance(p, pts[0], pts[1]);
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const double d = point_segment_distance(p, pts[i], pts[i + 1]);
    if (d < best) {
      best = d;
      best_idx = i;
    }
  }
  return best_idx;
}

Heading segment_heading_at_nearest(GeoPosition p, const Polyline& line) {
  const std::size_t i = nearest_segment_index(p, line);
  return segment_heading(line.points()[i], line.points()[i + 1]);
}

PointF point_at_arc(const Polyline& line, double arc_cm) {
  const auto& pts = line.points();
  if (arc_cm <= 0.0) return PointF{double(pts.front().x), double(pts.front().y)};
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double seg = distance_cm(pts[i], pts[i + 1]);
    if (arc_cm <= acc + seg) {
      const double t = (arc_cm - acc) / seg;
      return PointF{pts[i].x + t * (pts[i + 1].x - pts[i].x),
                    pts[i].y + t * (pts[i + 1].y - pts[i].y)};
    }
    acc += seg;
  }
  return PointF{double(pts.back().x), double(pts.back().y)};
}

GeoPosition rounded_point_at_arc(const Polyline& line, double arc_cm) {
  const PointF f = point_at_arc(line, arc_cm);
  return GeoPosition{std::llround(f.x), std::llround(f.y)};
}

Heading heading_at_arc(const Polyline& line, double arc_cm) {
  const auto& pts = line.points();
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double seg = distance_cm(pts[i], pts[i + 1]);
    if (arc_cm <= acc + seg) return segment_heading(pts[i], pts[i + 1]);
    acc += seg;
  }
  return segment_heading(pts[pts.size() - 2], pts.back());
}

}  // namespace c2i
