#include "doctest.h"

#include "qrk/kernels.hpp"
#include "qrk/krall_racah.hpp"

using namespace qrk;

namespace {
RacahParams canonical(int N = 4) {
    RacahParams::Free f;
    f.alpha = Rational(1, 5);
    f.beta = Rational(1, 7);
    f.delta = Rational(1, 3);
    return RacahParams(Rational(1, 2), N, Truncation::GammaQ, f);
}
// a positive-definite set: same parameters with delta pushed below q^N
RacahParams positive_set(int N = 4) {
    RacahParams::Free f;
    f.alpha = Rational(1, 5);
    f.beta = Rational(1, 7);
    f.delta = qrk::pow(Rational(1, 4), N + 2);
    return RacahParams(Rational(1, 2), N, Truncation::GammaQ, f);
}
}  // namespace

TEST_CASE("kernel sum basics") {
    RacahParams p = canonical();
    auto fam = make_racah_family(p);
    for (long s = 0; s <= 4; ++s)
        for (long t = 0; t <= 4; ++t) {
            CHECK(kernel_sum(*fam, 0, s, t) == Rational(1));  // 1/d2_0 = 1
            CHECK(kernel_sum(*fam, 2, s, t) == kernel_sum(*fam, 2, t, s));
        }
    CHECK(kernel_sum(*fam, -1, 0, 0).is_zero());  // empty sum
    CHECK(kernel_sum(*fam, 2, 1, 3) == Rational::parse("149576685125560693/23335461144859860"));
}

TEST_CASE("Christoffel-Darboux closed form") {
    RacahParams p = canonical();
    auto fam = make_racah_family(p);
    for (int n = 0; n <= 3; ++n)
        for (long s = 0; s <= 4; ++s)
            for (long t = 0; t <= 4; ++t) {
                if (s == t) continue;
                CHECK(kernel_cd(*fam, n, s, t) == kernel_sum(*fam, n, s, t));
            }
    CHECK_THROWS_AS(kernel_cd(*fam, 2, 1, 1), std::domain_error);
}

TEST_CASE("compact endpoint forms equal the sum on the full grid") {
    for (int N : {3, 4, 5}) {
        RacahParams p = canonical(N);
        auto fam = make_racah_family(p);
        for (int n = 1; n <= N; ++n)
            for (long s = 0; s <= N; ++s) {
                CHECK(kernel_at0_compact(p, n, s) == kernel_sum(*fam, n - 1, s, 0));
                CHECK(kernel_atN_compact(p, n, s) == kernel_sum(*fam, n - 1, s, N));
            }
    }
}

TEST_CASE("compact forms under the other truncations") {
    RacahParams::Free f;
    f.beta = Rational(1, 7);
    f.gamma = Rational(2, 3);
    f.delta = Rational(1, 3);
    RacahParams pa(Rational(1, 2), 3, Truncation::AlphaQ, f);
    RacahParams::Free fb;
    fb.alpha = Rational(1, 5);
    fb.gamma = Rational(2, 3);
    fb.delta = Rational(1, 3);
    RacahParams pb(Rational(1, 2), 3, Truncation::BetaDeltaQ, fb);
    for (const RacahParams& p : {pa, pb}) {
        auto fam = make_racah_family(p);
        for (int n = 1; n <= 3; ++n)
            for (long s = 0; s <= 3; ++s) {
                CHECK(kernel_at0_compact(p, n, s) == kernel_sum(*fam, n - 1, s, 0));
                CHECK(kernel_atN_compact(p, n, s) == kernel_sum(*fam, n - 1, s, p.N()));
            }
    }
}

TEST_CASE("n = 1 compact forms reduce to the constant 1/d2_0") {
    RacahParams p = canonical();
    auto fam = make_racah_family(p);
    for (long s = 0; s <= 4; ++s) {
        CHECK(kernel_at0_compact(p, 1, s) == Rational(1));
        CHECK(kernel_atN_compact(p, 1, s) == Rational(1));
    }
}

TEST_CASE("reproducing property on monomials") {
    RacahParams p = canonical();
    auto fam = make_racah_family(p);
    std::vector<Rational> m = p.core().normalized_masses();
    for (int deg = 0; deg <= 3; ++deg)
        for (long t = 0; t <= 4; ++t)
            for (int j = 0; j <= deg; ++j) {
                Rational acc(0);
                for (long s = 0; s <= 4; ++s)
                    acc += kernel_sum(*fam, deg, s, t) * qrk::pow(p.x(s), j) * m[s];
                CHECK(acc == qrk::pow(p.x(t), j));
            }
}

TEST_CASE("diagonal positivity on a positive-definite set") {
    RacahParams p = positive_set();
    auto fam = make_racah_family(p);
    std::vector<Rational> m = p.core().normalized_masses();
    for (const Rational& w : m) CHECK(w > Rational(0));
    for (int n = 0; n <= 3; ++n) {
        CHECK(p.d2(n) > Rational(0));
        for (long s = 0; s <= 4; ++s) CHECK(kernel_sum(*fam, n, s, s) > Rational(0));
    }
}
