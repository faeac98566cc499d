#include <catch_amalgamated.hpp>

#include <random>

#include "ctverify/controller.hpp"
#include "ctverify/error.hpp"
#include "ctverify/scenario.hpp"

using namespace ctverify;
using namespace ctverify::control;
using Catch::Approx;

TEST_CASE("relative and safe distance", "[controller]") {
    CHECK(relative_distance(50.0, 10.0) == 40.0);
    CHECK(relative_distance(5.0, 3.0) == 2.0);
    CHECK(relative_distance(7.25, 7.25) == 0.0);

    ControllerConfig cfg;
    cfg.d_default = 10.0;
    cfg.t_gap = 1.4;
    CHECK(safe_distance(0.0, cfg) == 10.0);
    CHECK(safe_distance(10.0, cfg) == Approx(24.0).epsilon(1e-15));
    CHECK(safe_distance(11.11, cfg) == Approx(25.56).margin(0.01));
    CHECK(safe_distance(harness::kmh_to_ms(40.0), cfg) == Approx(25.5556).margin(1e-4));
}

TEST_CASE("mode selection", "[controller]") {
    SECTION("gap rule depends only on the sign of e_d") {
        CHECK(select_mode({0.0, 5.0}, Mode::Speed, ModeRule::GapSign) == Mode::Space);
        CHECK(select_mode({0.0, -5.0}, Mode::Space, ModeRule::GapSign) == Mode::Speed);
        CHECK(select_mode({0.0, 0.0}, Mode::Space, ModeRule::GapSign) == Mode::Speed);
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> d(-50.0, 50.0);
        for (int i = 0; i < 500; ++i) {
            const SwitchSignals s{d(rng), d(rng)};
            const Mode a = select_mode(s, Mode::Speed, ModeRule::GapSign);
            const Mode b = select_mode(s, Mode::Space, ModeRule::GapSign);
            REQUIRE(a == b);
            REQUIRE((a == Mode::Space) == (s.e_d > 0.0));
        }
    }
    SECTION("latched rule") {
        CHECK(select_mode({-1.0, 1.0}, Mode::Speed, ModeRule::Latched) == Mode::Space);
        CHECK(select_mode({-1.0, -1.0}, Mode::Space, ModeRule::Latched) == Mode::Speed);
        CHECK(select_mode({1.0, -1.0}, Mode::Space, ModeRule::Latched) == Mode::Space);
        CHECK(select_mode({1.0, -1.0}, Mode::Speed, ModeRule::Latched) == Mode::Speed);
    }
    CHECK(signal(Mode::Speed) == 1);
    CHECK(signal(Mode::Space) == -1);
}

TEST_CASE("pid_step", "[controller]") {
    CHECK(pid_step({1, 0, 0}, {}, 2.0, 0.1, 10.0).command == 2.0);
    CHECK(pid_step({0, 1, 0}, {}, 1.0, 0.1, 10.0).command == Approx(0.1));
    // P + D = 1 + (1 - 0) / 0.1
    CHECK(pid_step({1, 0, 1}, {0.0, 0.0}, 1.0, 0.1, 10.0).command == Approx(11.0));

    auto r = pid_step({0, 1, 0}, {9.95, 0.0}, 1.0, 0.1, 10.0);
    CHECK(r.state.integral == 10.0);
    CHECK(r.command == 10.0);
    r = pid_step({0, 1, 0}, {-9.95, 0.0}, -1.0, 0.1, 10.0);
    CHECK(r.state.integral == -10.0);
    CHECK(r.state.prev_error == -1.0);
}

TEST_CASE("controller_step in the following scenarios", "[controller]") {
    ControllerConfig cfg;
    cfg.v_set = harness::kmh_to_ms(10.0);

    SECTION("case1 start: speed mode with zero error") {
        const double v = cfg.v_set;
        auto out = controller_step(cfg, {}, {10.0, v, 50.0}, 0.1);
        CHECK(out.d_rel == 40.0);
        CHECK(out.d_safe == Approx(13.89).margin(0.01));
        CHECK(out.mode == Mode::Speed);
        CHECK(std::abs(out.a_cmd) < 1e-9);
    }
    SECTION("case2 start: saturated braking in space mode") {
        cfg.v_set = harness::kmh_to_ms(25.0);
        auto out = controller_step(cfg, {}, {3.0, harness::kmh_to_ms(20.0), 5.0}, 0.1);
        CHECK(out.d_rel == 2.0);
        CHECK(out.d_safe == Approx(17.78).margin(0.01));
        CHECK(out.mode == Mode::Space);
        CHECK(out.a_cmd == cfg.a_min);
    }
    SECTION("switching clears the integral of the controller going inactive") {
        ControllerState st;
        st.started = true;
        st.mode = Mode::Speed;
        st.speed.integral = 5.0;
        auto out = controller_step(cfg, st, {0.0, 10.0, 3.0}, 0.1);
        CHECK(out.mode == Mode::Space);
        CHECK(out.state.speed.integral == 0.0);
    }
}

TEST_CASE("controller output stays within the saturation band", "[controller][property]") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> pos(-100.0, 300.0);
    std::uniform_real_distribution<double> vel(0.0, 40.0);
    std::uniform_real_distribution<double> gain(0.0, 5.0);
    for (int i = 0; i < 2000; ++i) {
        ControllerConfig cfg;
        cfg.v_set = vel(rng);
        cfg.speed_pid = {gain(rng), gain(rng), gain(rng)};
        cfg.space_pid = {gain(rng), gain(rng), gain(rng)};
        cfg.mode_rule = i % 2 ? ModeRule::GapSign : ModeRule::Latched;
        ControllerState st;
        for (int k = 0; k < 5; ++k) {
            auto out = controller_step(cfg, st, {pos(rng), vel(rng), pos(rng)}, 0.1);
            REQUIRE(out.a_cmd >= cfg.a_min);
            REQUIRE(out.a_cmd <= cfg.a_max);
            REQUIRE((signal(out.mode) == 1 || signal(out.mode) == -1));
            st = out.state;
        }
    }
}

TEST_CASE("controller config validation", "[controller]") {
    ControllerConfig cfg;
    CHECK_NOTHROW(validate(cfg));
    cfg.a_min = 0.5;
    CHECK_THROWS_AS(validate(cfg), SchemaError);
    cfg = {};
    cfg.space_pid.kd = -1.0;
    CHECK_THROWS_AS(validate(cfg), SchemaError);
    CHECK(parse_mode_rule("latched") == ModeRule::Latched);
    CHECK_THROWS_AS(parse_mode_rule("both"), SchemaError);
}
