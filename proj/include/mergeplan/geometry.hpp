#ifndef MERGEPLAN_GEOMETRY_HPP
#define MERGEPLAN_GEOMETRY_HPP

#include <cmath>
#include <vector>

namespace mergeplan {

struct Vec2 {
    double x{0.0};
    double y{0.0};

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double norm() const { return std::hypot(x, y); }
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// Axis-aligned footprint dimensions; boxes are centered on a pose and
// rotated by its heading.
struct Rect {
    double length{4.0};
    double width{1.8};
};

// Separating-axis overlap test for two oriented rectangles.
bool boxes_overlap(const Vec2& center_a, double heading_a, const Rect& a,
                   const Vec2& center_b, double heading_b, const Rect& b);

// Covering-circle decomposition of a rectangular footprint: circles spaced
// along the length axis, each covering its slice of the rectangle.
struct CircleCover {
    std::vector<double> offsets;  // along the heading axis, from center
    double radius{0.0};
};

CircleCover cover_rect_with_circles(const Rect& r);

// Minimum clearance between two oriented rectangles under the covering-circle
// approximation: min over circle pairs of center distance minus both radii.
// Negative when the covers overlap.
double circle_cover_clearance(const Vec2& center_a, double heading_a, const Rect& a,
                              const Vec2& center_b, double heading_b, const Rect& b);

// Open polyline with cached cumulative arc length. Queries beyond either end
// extrapolate along the end segment directions.
class Polyline {
public:
    Polyline() = default;
    explicit Polyline(std::vector<Vec2> points);

    const std::vector<Vec2>& points() const { return pts_; }
    double length() const { return arc_.empty() ? 0.0 : arc_.back(); }
    bool empty() const { return pts_.size() < 2; }

    Vec2 point_at(double s) const;
    Vec2 tangent_at(double s) const;  // unit tangent of the containing segment
    double heading_at(double s) const;

    // Arc length of the closest point; extrapolated (may be < 0 or > length)
    // when the query lies beyond an end segment.
    double project(const Vec2& p) const;

    // Distance to the nearest point on the polyline itself (ends clamped).
    double distance_to(const Vec2& p) const;

    // Signed lateral offset at the projection foot; positive to the left of
    // the travel direction.
    double lateral_offset(const Vec2& p) const;

private:
    std::vector<Vec2> pts_;
    std::vector<double> arc_;
};

// Wraps an angle to (-pi, pi].
double normalize_angle(double theta);

}  // namespace mergeplan

#endif  // MERGEPLAN_GEOMETRY_HPP
