#include "ctverify/controller.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "ctverify/error.hpp"

namespace ctverify::control {

std::string_view to_string(ModeRule rule) {
    switch (rule) {
        case ModeRule::GapSign: return "gap";
        case ModeRule::Latched: return "latched";
    }
    return "?";
}

ModeRule parse_mode_rule(std::string_view text) {
    if (text == "gap") return ModeRule::GapSign;
    if (text == "latched") return ModeRule::Latched;
    throw SchemaError(fmt::format("unknown mode rule '{}' (expected gap or latched)", text));
}

namespace {

void validate_gains(const PidGains& g, const char* which) {
    for (double k : {g.kp, g.ki, g.kd}) {
        if (!std::isfinite(k) || k < 0.0) {
            throw SchemaError(fmt::format("{} gains must be finite and non-negative", which));
        }
    }
}

}  // namespace

void validate(const ControllerConfig& cfg) {
    if (!(cfg.d_default > 0.0)) throw SchemaError("d_default must be positive");
    if (!(cfg.t_gap > 0.0)) throw SchemaError("t_gap must be positive");
    if (!(cfg.a_min < 0.0 && cfg.a_max > 0.0)) throw SchemaError("need a_min < 0 < a_max");
    if (!std::isfinite(cfg.v_set) || cfg.v_set < 0.0) throw SchemaError("v_set must be >= 0");
    if (!std::isfinite(cfg.windup_limit) || cfg.windup_limit < 0.0) {
        throw SchemaError("windup_limit must be >= 0");
    }
    validate_gains(cfg.speed_pid, "speed_pid");
    validate_gains(cfg.space_pid, "space_pid");
}

Mode select_mode(const SwitchSignals& signals, Mode prev, ModeRule rule) {
    switch (rule) {
        case ModeRule::GapSign:
            return signals.e_d > 0.0 ? Mode::Space : Mode::Speed;
        case ModeRule::Latched:
            if (signals.e_d > 0.0) return Mode::Space;
            if (signals.e_v < 0.0) return Mode::Speed;
            return prev;
    }
    return prev;
}

PidResult pid_step(const PidGains& gains, const PidState& st, double error, double dt,
                   double windup_limit) {
    PidResult out;
    out.state.integral = std::clamp(st.integral + error * dt, -windup_limit, windup_limit);
    out.state.prev_error = error;
    out.command = gains.kp * error + gains.ki * out.state.integral +
                  gains.kd * (error - st.prev_error) / dt;
    return out;
}

ControlOutput controller_step(const ControllerConfig& cfg, const ControllerState& st,
                              const Measurements& m, double dt) {
    ControlOutput out;
    out.d_rel = relative_distance(m.x_lead, m.x_ego);
    out.d_safe = safe_distance(m.v_ego, cfg);
    out.signals.e_v = cfg.v_set - m.v_ego;
    out.signals.e_d = out.d_safe - out.d_rel;
    out.mode = select_mode(out.signals, st.mode, cfg.mode_rule);

    const double speed_error = out.signals.e_v;
    const double space_error = out.d_rel - out.d_safe;

    ControllerState next = st;
    const bool activated = !st.started || out.mode != st.mode;
    if (activated) {
        if (out.mode == Mode::Speed) {
            next.space.integral = 0.0;
            next.speed.prev_error = speed_error;
        } else {
            next.speed.integral = 0.0;
            next.space.prev_error = space_error;
        }
    }

    double raw = 0.0;
    if (out.mode == Mode::Speed) {
        auto r = pid_step(cfg.speed_pid, next.speed, speed_error, dt, cfg.windup_limit);
        raw = r.command;
        next.speed = r.state;
    } else {
        auto r = pid_step(cfg.space_pid, next.space, space_error, dt, cfg.windup_limit);
        raw = r.command;
        next.space = r.state;
    }
    next.mode = out.mode;
    next.started = true;

    out.a_cmd = std::clamp(raw, cfg.a_min, cfg.a_max);
    out.state = next;
    return out;
}

}  // namespace ctverify::control
