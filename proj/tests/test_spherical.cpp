#include <doctest.h>

#include <cmath>
#include <cstddef>

#include "opq/errors.hpp"
#include "opq/spherical.hpp"

#include "sphere_oracle.hpp"

using doctest::Approx;
using opq::QuantumNumbers;

TEST_CASE("quantum-number validation") {
    CHECK_THROWS_AS(QuantumNumbers(-1, 0), opq::invalid_input);
    CHECK_THROWS_AS(QuantumNumbers(2, 3), opq::invalid_input);
    CHECK_THROWS_AS(QuantumNumbers(2, -3), opq::invalid_input);
    CHECK_NOTHROW(QuantumNumbers(2, -2));
    CHECK_NOTHROW(QuantumNumbers(0, 0));
}

TEST_CASE("low-order harmonics against closed forms") {
    const double pi = std::acos(-1.0);
    // constant harmonic: S = ln 4 pi
    CHECK(opq::spherical_entropy(QuantumNumbers(0, 0)) ==
          Approx(std::log(4.0 * pi)).epsilon(1e-13));
    // S_{1,0} = ln 4 pi + 2/3 - ln 3
    CHECK(opq::spherical_entropy(QuantumNumbers(1, 0)) ==
          Approx(std::log(4.0 * pi) + 2.0 / 3.0 - std::log(3.0))
              .epsilon(1e-11));
    // S_{1,1} = ln(2 pi / 3) + 5/3
    CHECK(opq::spherical_entropy(QuantumNumbers(1, 1)) ==
          Approx(std::log(2.0 * pi / 3.0) + 5.0 / 3.0).epsilon(1e-12));
    // 50-digit reference for S_{2,1}
    CHECK(opq::spherical_entropy(QuantumNumbers(2, 1)) ==
          Approx(2.2631601986404687509).epsilon(5e-9));
}

TEST_CASE("profiles mirror exactly and match single evaluations") {
    auto prof = opq::spherical_entropy_profile(6);
    REQUIRE(prof.size() == 13);
    for (std::size_t i = 0; i < prof.size(); ++i)
        CHECK(prof[i].m == static_cast<long>(i) - 6);
    for (long m = 1; m <= 6; ++m)
        CHECK(prof[6 + m].S == prof[6 - m].S);  // bit-identical by design
    CHECK(prof[6 + 4].S == opq::spherical_entropy(QuantumNumbers(6, 4)));

    auto window = opq::spherical_entropy_profile(6, -2, 5);
    REQUIRE(window.size() == 8);
    CHECK(window.front().m == -2);
    CHECK(window.back().m == 5);
    CHECK(window[2].S == prof[6].S);

    CHECK_THROWS_AS(opq::spherical_entropy_profile(3, -4, 2),
                    opq::invalid_input);
    CHECK_THROWS_AS(opq::spherical_entropy_profile(3, 2, 1),
                    opq::invalid_input);
}

TEST_CASE("full l = 5 profile against the quadrature oracle") {
    auto rule = sphere_oracle_rule(2000);
    auto prof = opq::spherical_entropy_profile(5, 0, 5);
    for (const auto& pt : prof) {
        const double ref = sphere_oracle_entropy(5, pt.m, rule);
        CHECK(pt.S == Approx(ref).epsilon(2e-7).scale(1.0));
    }
}
