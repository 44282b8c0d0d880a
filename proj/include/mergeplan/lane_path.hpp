#ifndef MERGEPLAN_LANE_PATH_HPP
#define MERGEPLAN_LANE_PATH_HPP

#include "mergeplan/geometry.hpp"

namespace mergeplan {

// Reference path of one agent: a centerline polyline plus the lane width.
struct LanePath {
    Polyline centerline;
    double width{3.5};

    // Whether a point lies within half a lane width of the centerline.
    bool occupies(const Vec2& p) const {
        return std::abs(centerline.lateral_offset(p)) <= 0.5 * width;
    }
};

}  // namespace mergeplan

#endif  // MERGEPLAN_LANE_PATH_HPP
