#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace c2i {

// All coordinates are integer centimeters in a scenario-local planar frame:
// x grows east, y grows north. Integer fixed point keeps equality exact.
using Coord = std::int64_t;
inline constexpr Coord kCoordLimit = 1'000'000'000;

using WideInt = __int128;

struct GeoPosition {
  Coord x{0};
  Coord y{0};
  friend bool operator==(const GeoPosition&, const GeoPosition&) = default;
};

bool position_in_bounds(GeoPosition p);

WideInt squared_distance(GeoPosition a, GeoPosition b);
double distance_cm(GeoPosition a, GeoPosition b);
std::int64_t isqrt_floor(WideInt v);

// Compass heading, clockwise from north, kept in tenths of a degree so that
// wire values and comparisons stay integer-exact.
class Heading {
 public:
  Heading() = default;
  static Heading from_decidegrees(long long deci);
  static Heading from_degrees(double deg);
  int decidegrees() const { return deci_; }
  double degrees() const { return deci_ / 10.0; }
  friend bool operator==(const Heading&, const Heading&) = default;

 private:
  int deci_ = 0;  // [0, 3600)
};

int heading_difference_deci(Heading a, Heading b);  // [0, 1800]
double heading_difference_deg(Heading a, Heading b);
Heading segment_heading(GeoPosition from, GeoPosition to);

class Polyline {
 public:
  // At least two points, no two consecutive points identical.
  explicit Polyline(std::vector<GeoPosition> points);
  const std::vector<GeoPosition>& points() const { return points_; }
  std::size_t segment_count() const { return points_.size() - 1; }
  double length_cm() const;
  friend bool operator==(const Polyline&, const Polyline&) = default;

 private:
  std::vector<GeoPosition> points_;
};

struct Circle {
  GeoPosition center;
  Coord radius_cm{0};
  friend bool operator==(const Circle&, const Circle&) = default;
};

struct Polygon {
  std::vector<GeoPosition> vertices;
  friend bool operator==(const Polygon&, const Polygon&) = default;
};

using Area = std::variant<Circle, Polygon>;

Area make_circle(GeoPosition center, Coord radius_cm);
// Vertices form a simple polygon; the closing edge last->first is implicit.
Area make_polygon(std::vector<GeoPosition> vertices);
bool area_equal(const Area& a, const Area& b);

// Boundary counts as inside.
bool contains(const Area& area, GeoPosition p);

struct ObstructionSegment {
  GeoPosition a;
  GeoPosition b;
  friend bool operator==(const ObstructionSegment&, const ObstructionSegment&) = default;
};

ObstructionSegment make_obstruction(GeoPosition a, GeoPosition b);

// True iff the open segment a-b meets no obstruction segment. Touching an
// obstruction endpoint blocks; touching only at a or b themselves does not.
bool line_of_sight(GeoPosition a, GeoPosition b,
                   std::span<const ObstructionSegment> obstructions);

double distance_to_polyline(GeoPosition p, const Polyline& line);
// Index of the segment attaining the minimum distance; ties go to the lowest index.
std::size_t nearest_segment_index(GeoPosition p, const Polyline& line);
Heading segment_heading_at_nearest(GeoPosition p, const Polyline& line);

// Closed-closed segment intersection (single points count).
bool segments_intersect(GeoPosition a1, GeoPosition a2, GeoPosition b1, GeoPosition b2);
bool on_segment(GeoPosition p, GeoPosition a, GeoPosition b);
double point_segment_distance(GeoPosition p, GeoPosition a, GeoPosition b);

struct PointF {
  double x{0};
  double y{0};
};

// Position along the polyline at the given arc length, clamped to [0, length].
PointF point_at_arc(const Polyline& line, double arc_cm);
GeoPosition rounded_point_at_arc(const Polyline& line, double arc_cm);
Heading heading_at_arc(const Polyline& line, double arc_cm);

}  // namespace c2i
