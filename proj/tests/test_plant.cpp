#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "ctverify/error.hpp"
#include "ctverify/plant.hpp"

using namespace ctverify;
using namespace ctverify::plant;
using Catch::Approx;

TEST_CASE("step_ego integrates the double integrator", "[plant]") {
    SECTION("zero acceleration") {
        auto s = step_ego({0.0, 10.0, 0.0}, 0.0, 0.1);
        CHECK(s.x == Approx(1.0));
        CHECK(s.v == 10.0);
    }
    SECTION("clamp at standstill") {
        auto s = step_ego({0.0, 0.0, 0.0}, -2.0, 0.1);
        CHECK(s.x == 0.0);
        CHECK(s.v == 0.0);
        CHECK(s.a == -2.0);
    }
    SECTION("braking") {
        // x = 10*0.1 - 0.5*2*0.01 = 0.99, v = 10 - 0.2
        auto s = step_ego({0.0, 10.0, 0.0}, -2.0, 0.1);
        CHECK(s.x == Approx(0.99).epsilon(1e-12));
        CHECK(s.v == Approx(9.8).epsilon(1e-12));
    }
    SECTION("stop inside the step uses the exact stop point") {
        // v=0.1, a=-2: stops after 0.05 s having moved 0.1*0.05 - 0.5*2*0.0025 = 0.0025
        auto s = step_ego({5.0, 0.1, 0.0}, -2.0, 0.1);
        CHECK(s.v == 0.0);
        CHECK(s.x == Approx(5.0025).epsilon(1e-12));
    }
}

TEST_CASE("step_ego rejects non-finite input", "[plant]") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(step_ego({nan, 1.0, 0.0}, 0.0, 0.1), SimulationError);
    CHECK_THROWS_AS(step_ego({0.0, 1.0, 0.0}, std::numeric_limits<double>::infinity(), 0.1),
                    SimulationError);
    CHECK_THROWS_AS(step_ego({0.0, 1.0, 0.0}, 0.0, 0.0), SimulationError);
}

TEST_CASE("step_lead follows the profile", "[plant]") {
    SECTION("constant") {
        const LeadProfile p = ConstantSpeed{8.33};
        for (double t : {0.0, 1.7, 40.0}) {
            auto s = step_lead(t, p, {100.0, 8.33, 0.0}, 0.1);
            CHECK(s.v == 8.33);
            CHECK(s.x == Approx(100.833));
        }
    }
    SECTION("sine zero crossing") {
        const LeadProfile p = SineSpeed{10.0, 2.0, 0.5};
        // sin(0.5 * 2*pi) = 0
        auto s = step_lead(2.0 * std::numbers::pi - 0.1, p, {0.0, 10.0, 0.0}, 0.1);
        CHECK(s.v == Approx(10.0).margin(1e-12));
    }
    SECTION("sine crest") {
        const LeadProfile p = SineSpeed{10.0, 2.0, 0.5};
        auto s = step_lead(std::numbers::pi - 0.1, p, {0.0, 11.9, 0.0}, 0.1);
        CHECK(s.v == Approx(12.0).epsilon(1e-12));
        CHECK(s.x == Approx(0.5 * (11.9 + 12.0) * 0.1));
    }
}

TEST_CASE("lead profile validation", "[plant]") {
    CHECK_NOTHROW(validate(SineSpeed{10.0, 10.0, 1.0}));
    CHECK_THROWS_AS(validate(SineSpeed{10.0, 11.0, 1.0}), SchemaError);
    CHECK_THROWS_AS(validate(ConstantSpeed{-1.0}), SchemaError);
}

TEST_CASE("bounded commands keep the ego state finite and non-negative", "[plant][property]") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> accel(-2.0, 2.0);
    std::uniform_real_distribution<double> speed(0.0, 30.0);
    for (int run = 0; run < 200; ++run) {
        VehicleState s{0.0, speed(rng), 0.0};
        for (int k = 0; k < 450; ++k) {
            const double a = accel(rng);
            const VehicleState next = step_ego(s, a, 0.1);
            REQUIRE(std::isfinite(next.x));
            REQUIRE(std::isfinite(next.v));
            REQUIRE(next.v >= 0.0);
            REQUIRE(next.x >= s.x);
            if (a == 0.0) REQUIRE(next.v == s.v);
            s = next;
        }
    }
    VehicleState coast{0.0, 12.5, 0.0};
    for (int k = 0; k < 100; ++k) coast = step_ego(coast, 0.0, 0.1);
    CHECK(coast.v == 12.5);
}
