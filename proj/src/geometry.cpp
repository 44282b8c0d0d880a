#include "mergeplan/geometry.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace mergeplan {

namespace {

std::array<Vec2, 4> box_corners(const Vec2& c, double heading, const Rect& r) {
    const double ch = std::cos(heading);
    const double sh = std::sin(heading);
    const double hl = 0.5 * r.length;
    const double hw = 0.5 * r.width;
    std::array<Vec2, 4> out;
    int k = 0;
    for (double sx : {+1.0, -1.0}) {
        for (double sy : {+1.0, -1.0}) {
            const double lx = sx * hl;
            const double ly = sy * hw;
            out[k++] = {c.x + lx * ch - ly * sh, c.y + lx * sh + ly * ch};
        }
    }
    return out;
}

// Projection interval of corners onto a unit axis.
std::pair<double, double> project_onto(const std::array<Vec2, 4>& corners, const Vec2& axis) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const Vec2& p : corners) {
        const double d = dot(p, axis);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi};
}

}  // namespace

bool boxes_overlap(const Vec2& center_a, double heading_a, const Rect& a,
                   const Vec2& center_b, double heading_b, const Rect& b) {
    const auto ca = box_corners(center_a, heading_a, a);
    const auto cb = box_corners(center_b, heading_b, b);

    const std::array<Vec2, 4> axes = {
        Vec2{std::cos(heading_a), std::sin(heading_a)},
        Vec2{-std::sin(heading_a), std::cos(heading_a)},
        Vec2{std::cos(heading_b), std::sin(heading_b)},
        Vec2{-std::sin(heading_b), std::cos(heading_b)},
    };
    for (const Vec2& axis : axes) {
        const auto [alo, ahi] = project_onto(ca, axis);
        const auto [blo, bhi] = project_onto(cb, axis);
        if (ahi < blo || bhi < alo) {
            return false;  // separating axis found
        }
    }
    return true;
}

CircleCover cover_rect_with_circles(const Rect& r) {
    if (r.length <= 0.0 || r.width <= 0.0) {
        throw std::invalid_argument("cover_rect_with_circles: footprint dimensions must be > 0");
    }
    const int n = std::max(1, static_cast<int>(std::ceil(r.length / r.width)));
    const double slice = r.length / n;
    CircleCover cover;
    cover.radius = std::hypot(0.5 * slice, 0.5 * r.width);
    cover.offsets.reserve(n);
    for (int i = 0; i < n; ++i) {
        cover.offsets.push_back(-0.5 * r.length + (i + 0.5) * slice);
    }
    return cover;
}

double circle_cover_clearance(const Vec2& center_a, double heading_a, const Rect& a,
                              const Vec2& center_b, double heading_b, const Rect& b) {
    const CircleCover cov_a = cover_rect_with_circles(a);
    const CircleCover cov_b = cover_rect_with_circles(b);
    const Vec2 dir_a{std::cos(heading_a), std::sin(heading_a)};
    const Vec2 dir_b{std::cos(heading_b), std::sin(heading_b)};

    double best = std::numeric_limits<double>::infinity();
    for (double oa : cov_a.offsets) {
        const Vec2 pa = center_a + dir_a * oa;
        for (double ob : cov_b.offsets) {
            const Vec2 pb = center_b + dir_b * ob;
            best = std::min(best, (pa - pb).norm());
        }
    }
    return best - cov_a.radius - cov_b.radius;
}

Polyline::Polyline(std::vector<Vec2> points) : pts_(std::move(points)) {
    if (pts_.size() < 2) {
        throw std::invalid_argument("Polyline: need at least 2 points");
    }
    arc_.resize(pts_.size(), 0.0);
    for (size_t i = 1; i < pts_.size(); ++i) {
        const double seg = (pts_[i] - pts_[i - 1]).norm();
        if (seg <= 0.0) {
            throw std::invalid_argument("Polyline: consecutive points must be distinct");
        }
        arc_[i] = arc_[i - 1] + seg;
    }
}

Vec2 Polyline::point_at(double s) const {
    if (s <= 0.0) {
        const Vec2 d = tangent_at(0.0);
        return pts_.front() + d * s;
    }
    if (s >= length()) {
        const Vec2 d = tangent_at(length());
        return pts_.back() + d * (s - length());
    }
    const auto it = std::upper_bound(arc_.begin(), arc_.end(), s);
    const size_t i = static_cast<size_t>(it - arc_.begin());  // s < arc_[i]
    const double t = (s - arc_[i - 1]) / (arc_[i] - arc_[i - 1]);
    return pts_[i - 1] + (pts_[i] - pts_[i - 1]) * t;
}

Vec2 Polyline::tangent_at(double s) const {
    size_t i = 1;
    if (s >= length()) {
        i = pts_.size() - 1;
    } else if (s > 0.0) {
        const auto it = std::upper_bound(arc_.begin(), arc_.end(), s);
        i = static_cast<size_t>(it - arc_.begin());
    }
    const Vec2 d = pts_[i] - pts_[i - 1];
    const double n = d.norm();
    return {d.x / n, d.y / n};
}

double Polyline::heading_at(double s) const {
    const Vec2 t = tangent_at(s);
    return std::atan2(t.y, t.x);
}

double Polyline::project(const Vec2& p) const {
    double best_dist2 = std::numeric_limits<double>::infinity();
    double best_s = 0.0;
    for (size_t i = 1; i < pts_.size(); ++i) {
        const Vec2 a = pts_[i - 1];
        const Vec2 seg = pts_[i] - a;
        const double len2 = dot(seg, seg);
        double t = dot(p - a, seg) / len2;
        t = std::clamp(t, 0.0, 1.0);
        const Vec2 foot = a + seg * t;
        const double d2 = dot(p - foot, p - foot);
        if (d2 < best_dist2) {
            best_dist2 = d2;
            best_s = arc_[i - 1] + t * std::sqrt(len2);
        }
    }
    // Extrapolate when the closest feature is an end vertex.
    if (best_s <= 0.0) {
        return dot(p - pts_.front(), tangent_at(0.0));
    }
    if (best_s >= length()) {
        return length() + dot(p - pts_.back(), tangent_at(length()));
    }
    return best_s;
}

double Polyline::distance_to(const Vec2& p) const {
    const double s = std::clamp(project(p), 0.0, length());
    return (p - point_at(s)).norm();
}

double Polyline::lateral_offset(const Vec2& p) const {
    const double s = project(p);
    return cross(tangent_at(s), p - point_at(s));
}

double normalize_angle(double theta) {
    double a = std::remainder(theta, 2.0 * M_PI);
    if (a <= -M_PI) {
        a = M_PI;
    }
    return a;
}

}  // namespace mergeplan
