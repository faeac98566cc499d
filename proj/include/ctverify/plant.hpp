#pragma once

#include <variant>

namespace ctverify::plant {

struct VehicleState {
    double x = 0.0;  // position, m
    double v = 0.0;  // velocity, m/s
    double a = 0.0;  // applied acceleration, m/s^2
};

struct ConstantSpeed {
    double v0 = 0.0;
};

/// v(t) = v0 + amplitude * sin(angular_frequency * t)
struct SineSpeed {
    double v0 = 0.0;
    double amplitude = 0.0;
    double angular_frequency = 0.0;
};

using LeadProfile = std::variant<ConstantSpeed, SineSpeed>;

/// Throws SchemaError when v0 < 0 or the sine amplitude would drive the speed negative.
void validate(const LeadProfile& profile);

/// Speed prescribed by the profile at absolute time t.
double profile_speed(const LeadProfile& profile, double t);

/// Double-integrator update under piecewise-constant acceleration. Velocity is
/// clamped at zero; when the clamp fires, the position is the exact stop point.
/// Throws SimulationError on non-finite input or dt <= 0.
VehicleState step_ego(const VehicleState& state, double a_cmd, double dt);

/// Advances the lead vehicle from time t to t + dt. The new speed is the
/// profile speed at t + dt and the position advances by the trapezoidal
/// integral of the speed over the step.
VehicleState step_lead(double t, const LeadProfile& profile, const VehicleState& state, double dt);

}  // namespace ctverify::plant
