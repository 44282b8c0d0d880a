#include "mergeplan/vehicle_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace mergeplan {

namespace {

struct Deriv {
    double dx, dy, dtheta, dv;
};

Deriv dynamics(const VehicleState& s, const Action& u, double wheelbase) {
    return {s.v * std::cos(s.theta), s.v * std::sin(s.theta),
            s.v * std::tan(u.delta) / wheelbase, u.a};
}

VehicleState advance(const VehicleState& s, const Deriv& d, double h) {
    return {s.x + h * d.dx, s.y + h * d.dy, s.theta + h * d.dtheta, s.v + h * d.dv};
}

VehicleState rk4(const VehicleState& s, const Action& u, double h, double wheelbase) {
    const Deriv k1 = dynamics(s, u, wheelbase);
    const Deriv k2 = dynamics(advance(s, k1, 0.5 * h), u, wheelbase);
    const Deriv k3 = dynamics(advance(s, k2, 0.5 * h), u, wheelbase);
    const Deriv k4 = dynamics(advance(s, k3, h), u, wheelbase);
    VehicleState out;
    out.x = s.x + h / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
    out.y = s.y + h / 6.0 * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy);
    out.theta = s.theta + h / 6.0 * (k1.dtheta + 2.0 * k2.dtheta + 2.0 * k3.dtheta + k4.dtheta);
    out.v = s.v + h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
    return out;
}

}  // namespace

Action ActionLimits::clamp(const Action& u) const {
    return {std::clamp(u.delta, delta_min, delta_max), std::clamp(u.a, a_min, a_max)};
}

VehicleState step_single_track(const VehicleState& s, const Action& u, double dt,
                               double wheelbase) {
    if (dt <= 0.0) {
        throw std::invalid_argument("step_single_track: dt must be > 0");
    }
    if (s.v <= 0.0 && u.a <= 0.0) {
        VehicleState out = s;
        out.v = 0.0;
        return out;
    }

    double h = dt;
    if (u.a < 0.0 && s.v + u.a * dt < 0.0) {
        h = -s.v / u.a;  // exact stopping time; v' = a is decoupled from the pose
    }
    VehicleState out = rk4(s, u, h, wheelbase);
    out.v = std::max(out.v, 0.0);
    out.theta = normalize_angle(out.theta);
    return out;
}

}  // namespace mergeplan
