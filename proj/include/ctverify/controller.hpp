#pragma once

#include <cstdint>
#include <string_view>

namespace ctverify::control {

struct PidGains {
    double kp = 0.0;
    double ki = 0.0;
    double kd = 0.0;
};

struct PidState {
    double integral = 0.0;
    double prev_error = 0.0;
};

/// Activation signal: +1 selects the speed controller, -1 the spacing controller.
enum class Mode : std::int8_t { Speed = 1, Space = -1 };

constexpr int signal(Mode m) { return static_cast<int>(m); }

/// How the active controller is chosen from the switching signals.
enum class ModeRule {
    /// Space iff the gap is below the safe distance (e_d > 0), Speed otherwise.
    GapSign,
    /// Literal two-branch rule: Speed if e_v < 0, Space if e_d > 0. Space wins
    /// when both fire; the previous mode is kept when neither does.
    Latched,
};

std::string_view to_string(ModeRule rule);
ModeRule parse_mode_rule(std::string_view text);

struct ControllerConfig {
    double v_set = 0.0;      // m/s
    double d_default = 10.0; // m, standstill spacing
    double t_gap = 1.4;      // s
    PidGains speed_pid{0.5, 0.0, 0.0};
    PidGains space_pid{0.5, 0.02, 0.4};
    double windup_limit = 10.0;
    double a_min = -2.0;  // m/s^2
    double a_max = 2.0;   // m/s^2
    ModeRule mode_rule = ModeRule::GapSign;
};

/// Throws SchemaError when a field violates its range.
void validate(const ControllerConfig& cfg);

struct SwitchSignals {
    double e_v = 0.0;  // V_set - V_ego
    double e_d = 0.0;  // D_safe - D_rel
};

inline double relative_distance(double x_lead, double x_ego) { return x_lead - x_ego; }

inline double safe_distance(double v_ego, const ControllerConfig& cfg) {
    return cfg.d_default + cfg.t_gap * v_ego;
}

Mode select_mode(const SwitchSignals& signals, Mode prev, ModeRule rule);

struct PidResult {
    double command = 0.0;
    PidState state;
};

/// Positional PID with a clamped integrator:
///   integral' = clamp(integral + error*dt, +-windup_limit)
///   command   = kp*error + ki*integral' + kd*(error - prev_error)/dt
PidResult pid_step(const PidGains& gains, const PidState& st, double error, double dt,
                   double windup_limit);

struct ControllerState {
    Mode mode = Mode::Speed;
    PidState speed;
    PidState space;
    bool started = false;
};

struct Measurements {
    double x_ego = 0.0;
    double v_ego = 0.0;
    double x_lead = 0.0;
};

struct ControlOutput {
    double a_cmd = 0.0;
    Mode mode = Mode::Speed;
    double d_rel = 0.0;
    double d_safe = 0.0;
    SwitchSignals signals;
    ControllerState state;
};

/// One control period: distances, mode selection, the active PID, saturation.
/// On activation of a controller its derivative memory is primed with the
/// current error; the controller that goes inactive has its integral cleared.
ControlOutput controller_step(const ControllerConfig& cfg, const ControllerState& st,
                              const Measurements& m, double dt);

}  // namespace ctverify::control
