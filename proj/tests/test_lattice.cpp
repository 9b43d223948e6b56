#include "doctest.h"

#include "qrk/lattice.hpp"

using qrk::Lattice;
using qrk::QBase;
using qrk::Rational;

namespace {
Lattice canonical_lattice(int N = 4) {
    QBase base{Rational(1, 2)};                      // q = 1/4
    Rational dg(1, 3);                               // delta*gamma
    return Lattice(base, dg * base.q, N);            // c1 = delta gamma q
}
}

TEST_CASE("lattice values at integer and half-integer points") {
    Lattice lat = canonical_lattice();
    Rational q(1, 4), dg(1, 3);
    CHECK(lat.xi(0) == Rational(1) + dg * q);
    // s = 1/2: v^{-1} + dg v^3
    CHECK(lat.x(1) == Rational(2) + dg * Rational(1, 8));
    // s = 2: q^{-2} + dg q^3 = 16 + 1/192
    CHECK(lat.xi(2) == Rational(16) + Rational(1, 192));
}

TEST_CASE("delta_x closed form equals x(s+1) - x(s) on -1..N+1") {
    Lattice lat = canonical_lattice();
    for (long s = -1; s <= 5; ++s) CHECK(lat.delta_x(s) == lat.xi(s + 1) - lat.xi(s));
    // q=1/4, dg=1/3, s=1 -> 767/64
    CHECK(lat.delta_x(1) == Rational(767, 64));
}

TEST_CASE("shift consistency: grad x(s+1) = Delta x(s)") {
    Lattice lat = canonical_lattice();
    for (long s = -1; s <= 5; ++s) CHECK(lat.delta_x(s) == lat.xi(s + 1) - lat.xi(s + 1 - 1));
}

TEST_CASE("delta_x_half equals x(s+1/2) - x(s-1/2)") {
    Lattice lat = canonical_lattice();
    for (long s = 0; s <= 4; ++s) {
        CHECK(lat.delta_x_half(s) == lat.x(2 * s + 1) - lat.x(2 * s - 1));
        CHECK(lat.delta_x_half(s) > Rational(0));  // small delta*gamma*q keeps q^{-s} dominant
    }
}

TEST_CASE("injectivity is checked at construction") {
    QBase base{Rational(1, 2)};
    // c1 = q^{-3} makes x(1) = x(2)
    CHECK_THROWS_AS(Lattice(base, qrk::pow(base.q, -3), 4), std::domain_error);
    // c1 = 1 = q^0 zeroes Delta x(-1/2)
    CHECK_THROWS_AS(Lattice(base, Rational(1), 4), std::domain_error);
    Lattice ok = canonical_lattice();
    for (long s = 0; s <= 4; ++s)
        for (long t = s + 1; t <= 4; ++t) CHECK(ok.xi(s) != ok.xi(t));
}

TEST_CASE("difference quotients") {
    Lattice lat = canonical_lattice();
    auto c = [](long) { return Rational(7); };
    auto x = [&](long s) { return lat.xi(s); };
    auto x2 = [&](long s) { return lat.xi(s) * lat.xi(s); };
    for (long s = 0; s <= 3; ++s) {
        CHECK(lat.fwd_quot(c, s) == Rational(0));
        CHECK(lat.bwd_quot(c, s) == Rational(0));
        CHECK(lat.fwd_quot(x, s) == Rational(1));
        CHECK(lat.bwd_quot(x, s) == Rational(1));
        CHECK(lat.fwd_quot(x2, s) == lat.xi(s + 1) + lat.xi(s));
    }
}

TEST_CASE("soft edges: zero increments outside the guarded grid are errors at use") {
    QBase base{Rational(1, 2)};
    // c1 = q^{-(2N+1)} passes construction (u = 2N+1 is outside the guard)
    // but zeroes Delta x(N); the quotient reports it
    Lattice lat(base, qrk::pow(base.q, -9), 4);
    auto f = [&](long s) { return lat.xi(s) * lat.xi(s); };
    CHECK(lat.delta_x(4).is_zero());
    CHECK_THROWS_AS(lat.fwd_quot(f, 4), std::domain_error);
    CHECK_THROWS_AS(lat.bwd_quot(f, 5), std::domain_error);
}
