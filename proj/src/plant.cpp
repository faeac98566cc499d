#include "ctverify/plant.hpp"

#include <cmath>

#include <fmt/format.h>

#include "ctverify/error.hpp"

namespace ctverify::plant {

namespace {

void require_finite(double value, const char* what) {
    if (!std::isfinite(value)) {
        throw SimulationError(fmt::format("non-finite {}: {}", what, value));
    }
}

void require_step(double dt) {
    require_finite(dt, "time step");
    if (dt <= 0.0) throw SimulationError(fmt::format("time step must be positive, got {}", dt));
}

}  // namespace

void validate(const LeadProfile& profile) {
    std::visit(
        [](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if (!std::isfinite(p.v0) || p.v0 < 0.0) {
                throw SchemaError(fmt::format("lead speed v0 must be >= 0, got {}", p.v0));
            }
            if constexpr (std::is_same_v<P, SineSpeed>) {
                if (!std::isfinite(p.amplitude) || !std::isfinite(p.angular_frequency)) {
                    throw SchemaError("sine profile parameters must be finite");
                }
                if (std::abs(p.amplitude) > p.v0) {
                    throw SchemaError(fmt::format(
                        "sine amplitude {} exceeds v0 {}; lead speed would go negative",
                        p.amplitude, p.v0));
                }
            }
        },
        profile);
}

double profile_speed(const LeadProfile& profile, double t) {
    struct {
        double t;
        double operator()(const ConstantSpeed& c) const { return c.v0; }
        double operator()(const SineSpeed& s) const {
            return s.v0 + s.amplitude * std::sin(s.angular_frequency * t);
        }
    } speed{t};
    return std::visit(speed, profile);
}

VehicleState step_ego(const VehicleState& state, double a_cmd, double dt) {
    require_finite(state.x, "ego position");
    require_finite(state.v, "ego velocity");
    require_finite(a_cmd, "acceleration command");
    require_step(dt);

    VehicleState next;
    next.a = a_cmd;
    const double v_end = state.v + a_cmd * dt;
    if (v_end >= 0.0) {
        next.x = state.x + state.v * dt + 0.5 * a_cmd * dt * dt;
        next.v = v_end;
    } else {
        // Stops inside the step (a_cmd < 0 here); hold still for the remainder.
        const double t_stop = state.v > 0.0 ? -state.v / a_cmd : 0.0;
        next.x = state.x + state.v * t_stop + 0.5 * a_cmd * t_stop * t_stop;
        next.v = 0.0;
    }
    return next;
}

VehicleState step_lead(double t, const LeadProfile& profile, const VehicleState& state, double dt) {
    require_finite(t, "time");
    require_finite(state.x, "lead position");
    require_finite(state.v, "lead velocity");
    require_step(dt);

    VehicleState next;
    next.v = std::max(0.0, profile_speed(profile, t + dt));
    next.x = state.x + 0.5 * (state.v + next.v) * dt;
    next.a = (next.v - state.v) / dt;
    require_finite(next.x, "lead position");
    return next;
}

}  // namespace ctverify::plant
