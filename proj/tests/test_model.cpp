#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "twoatom/model.hpp"

using namespace twoatom;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("identical-atom default configuration is valid") {
    const AtomPair pair{1.0, 1.0, 0.0, 0.25, kPi / 2};
    const Drive drive{0.2, 0.0, kPi / 2, 0.0};
    CHECK(check(pair, drive, CouplingMode::independent()).empty());

    const Configuration config =
        validate(pair, drive, CouplingMode::independent());
    CHECK(config.gamma0 == doctest::Approx(1.0));
    CHECK(config.pair.gamma1 == doctest::Approx(1.0));
}

TEST_CASE("raw rates are normalized to gamma0 units") {
    const AtomPair raw{1.0, 10.0, 0.0, 0.5, kPi / 2};
    const Configuration config =
        validate(raw, Drive{}, CouplingMode::independent());

    CHECK(config.gamma0 == doctest::Approx(5.5));
    CHECK(config.pair.gamma1 == doctest::Approx(2.0 / 11.0).epsilon(1e-14));
    CHECK(config.pair.gamma2 == doctest::Approx(20.0 / 11.0).epsilon(1e-14));
    CHECK(config.pair.gamma_diff() ==
          doctest::Approx(-9.0 / 11.0).epsilon(1e-14));
}

TEST_CASE("normalization round trip is the identity") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> rate(1e-3, 50.0);
    for (int i = 0; i < 200; ++i) {
        const double raw1 = rate(rng);
        const double raw2 = rate(rng);
        const Configuration config = validate(
            AtomPair{raw1, raw2, 0.0, 0.3, kPi / 2}, Drive{},
            CouplingMode::independent());
        CHECK(std::abs(config.pair.gamma1 * config.gamma0 - raw1) <=
              1e-12 * raw1);
        CHECK(std::abs(config.pair.gamma2 * config.gamma0 - raw2) <=
              1e-12 * raw2);
        CHECK(std::abs(config.pair.gamma1 + config.pair.gamma2 - 2.0) < 1e-12);
    }
}

TEST_CASE("validation rejects unphysical parameters") {
    const Drive drive{0.2, 0.0, kPi / 2, 0.0};

    auto problems =
        check(AtomPair{-1.0, 1.0, 0.0, 0.25, kPi / 2}, drive,
              CouplingMode::independent());
    REQUIRE(problems.size() == 1);
    CHECK(problems[0] == "non-positive damping rate");

    problems = check(AtomPair{1.0, 1.0, 0.0, 0.0, kPi / 2}, drive,
                     CouplingMode::independent());
    REQUIRE(problems.size() == 1);
    CHECK(problems[0] == "non-positive separation");

    problems = check(AtomPair{1.0, 1.0, 0.0, 0.25, kPi / 2},
                     Drive{-0.1, 0.0, kPi / 2, 0.0},
                     CouplingMode::independent());
    REQUIRE(problems.size() == 1);
    CHECK(problems[0] == "negative Rabi frequency");

    // |gamma12| above sqrt(gamma1 gamma2) breaks damping-matrix positivity.
    problems = check(AtomPair{1.0, 1.0, 0.0, 0.25, kPi / 2}, drive,
                     CouplingMode::custom(0.1, 1.5));
    REQUIRE(problems.size() == 1);
    CHECK(problems[0].find("unphysical custom gamma12") != std::string::npos);

    CHECK_THROWS_AS(validate(AtomPair{-1.0, -2.0, 0.0, 0.0, kPi / 2}, drive,
                             CouplingMode::independent()),
                    std::invalid_argument);
}

TEST_CASE("custom gamma12 at the positivity boundary is accepted") {
    // Normalized 10:1 rates give sqrt(gamma1*gamma2) = 0.5749...
    const AtomPair pair{2.0 / 11.0, 20.0 / 11.0, 0.0, 0.5, kPi / 2};
    const double bound = std::sqrt(pair.gamma1 * pair.gamma2);
    CHECK(check(pair, Drive{}, CouplingMode::custom(0.0, bound)).empty());
    CHECK(!check(pair, Drive{}, CouplingMode::custom(0.0, bound + 1e-6))
               .empty());
}

TEST_CASE("per-atom detunings satisfy the defining identities") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> value(-100.0, 100.0);
    for (int i = 0; i < 500; ++i) {
        AtomPair pair;
        pair.delta = value(rng);
        Drive drive;
        drive.detuning_l = value(rng);
        const double d1 = laser_detuning_1(pair, drive);
        const double d2 = laser_detuning_2(pair, drive);
        CHECK(std::abs(d1 - d2 - pair.delta) < 1e-12);
        CHECK(std::abs(0.5 * (d1 + d2) - drive.detuning_l) < 1e-12);
    }
}

TEST_CASE("local Rabi frequencies keep the drive magnitude") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    std::uniform_real_distribution<double> sep(0.05, 3.0);
    std::uniform_real_distribution<double> rabi(0.0, 5.0);
    for (int i = 0; i < 200; ++i) {
        AtomPair pair;
        pair.separation = sep(rng);
        Drive drive{rabi(rng), 0.0, angle(rng), angle(rng)};
        CHECK(std::abs(std::abs(local_rabi_1(pair, drive)) - drive.rabi) <
              1e-12);
        CHECK(std::abs(std::abs(local_rabi_2(pair, drive)) - drive.rabi) <
              1e-12);
    }

    // Perpendicular drive: both atoms see the same phase phi_L.
    AtomPair pair;
    Drive drive{0.7, 0.0, kPi / 2, 0.3};
    const auto expected = std::polar(0.7, 0.3);
    CHECK(std::abs(local_rabi_1(pair, drive) - expected) < 1e-12);
    CHECK(std::abs(local_rabi_2(pair, drive) - expected) < 1e-12);
    CHECK(std::abs(mean_rabi(pair, drive) - expected) < 1e-12);
}
