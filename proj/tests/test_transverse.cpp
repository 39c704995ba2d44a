#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "slab/errors.hpp"
#include "slab/transverse.hpp"

using namespace slab;

TEST_CASE("profile values") {
    const TransverseMode m0(0, 1.0, 0.0), m1(1, 2.0, 0.0), m2(2, 1.0, 0.0);
    CHECK(eval_f(m0, 0.0) == 1.0);
    CHECK(eval_f(m1, 0.0) == 0.0);
    CHECK(eval_f(m2, 1.0) == doctest::Approx(2.0 * std::exp(-0.5)).epsilon(1e-15));
    CHECK(eval_g(m0, 0.3) == 0.0);
    CHECK(eval_g(m1, 0.0) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(m2.lambda_sq() == 4.0);
}

TEST_CASE("hermite recurrence matches the explicit sum") {
    for (int n = 0; n <= 12; ++n)
        for (double t : {-3.1, -0.7, 0.0, 0.4, 2.5}) {
            const double ref = oracle::hermite_explicit(n, t);
            CHECK(hermite(n, t) == doctest::Approx(ref).epsilon(1e-12).scale(1.0));
        }
}

TEST_CASE("g is the raising derivative of f") {
    for (int n = 0; n <= 5; ++n) {
        const TransverseMode m(n, 1.7, -0.4);
        const double h = 1e-5;
        for (double t = -3.0; t <= 3.0; t += 0.5) {
            const double y = m.y_of(t);
            const double fd = (eval_f(m, y + h) - eval_f(m, y - h)) / (2.0 * h) + (m.px() + m.field() * y) * eval_f(m, y);
            CHECK(std::abs(fd - eval_g(m, y)) < 1e-7 * std::max(1.0, std::abs(eval_g(m, y))));
        }
    }
}

TEST_CASE("oscillator equation residual") {
    for (int n = 0; n <= 6; ++n) {
        const TransverseMode m(n, 0.9, 0.25);
        const double h = 1e-2 / std::sqrt(m.field());
        double res = 0.0, fmax = 0.0;
        for (int i = 0; i < 200; ++i) {
            const double y = m.y_of(-6.0 + 12.0 * i / 199);
            const double f = eval_f(m, y);
            const double d2 = (-eval_f(m, y + 2 * h) + 16 * eval_f(m, y + h) - 30 * f + 16 * eval_f(m, y - h) -
                               eval_f(m, y - 2 * h)) /
                              (12 * h * h);
            const double u = m.px() + m.field() * y;
            res = std::max(res, std::abs(d2 + (m.field() - u * u + m.lambda_sq()) * f));
            fmax = std::max(fmax, std::abs(f));
        }
        CHECK(res < 1e-6 * fmax);
    }
}

TEST_CASE("normalized profiles are orthonormal") {
    const TransverseMode probe(0, 1.0, 0.0);
    const int N = 4001;
    const double L = 12.0, dt = 2.0 * L / (N - 1);
    for (int n = 0; n <= 6; ++n)
        for (int m = n; m <= 6; ++m) {
            const TransverseMode a(n, 1.0, 0.0), b(m, 1.0, 0.0);
            double s = 0.0;
            for (int i = 0; i < N; ++i) {
                const double y = probe.y_of(-L + i * dt);
                s += eval_f_normalized(a, y) * eval_f_normalized(b, y) * dt;
            }
            CHECK(std::abs(s - (n == m ? 1.0 : 0.0)) < 1e-8);
        }
}

TEST_CASE("landau energy and guards") {
    CHECK(energy_from_landau(1.3, 0.0, 0, 2.0) == 1.3);
    CHECK(energy_from_landau(1.0, 0.0, 1, 1.5) == doctest::Approx(2.0));
    CHECK(energy_from_landau(3.0, 4.0, 0, 7.0) == 5.0);
    CHECK_THROWS_AS(TransverseMode(0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(TransverseMode(-1, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(TransverseMode(kMaxLandauIndex + 1, 1.0, 0.0), DomainError);
    const TransverseMode m(3, 2.0, 0.5);
    CHECK(m.t_of(m.y_of(1.25)) == doctest::Approx(1.25));
}
