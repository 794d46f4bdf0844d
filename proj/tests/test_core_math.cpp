#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "modrec/core_math.hpp"
#include "rational_pk.hpp"

using namespace modrec;

TEST_CASE("mod_reduce basics") {
    CHECK(mod_reduce(0.0, 1.0) == 0.0);
    CHECK(mod_reduce(0.6, 1.0) == doctest::Approx(-0.4).epsilon(1e-15));
    CHECK(mod_reduce(-0.5, 1.0) == -0.5);  // half-open: -delta/2 stays
    CHECK(mod_reduce(0.5, 1.0) == -0.5);   // +delta/2 wraps down
    CHECK(mod_reduce(2.25, 1.0) == 0.25);
    CHECK_THROWS_AS(mod_reduce(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(mod_reduce(1.0, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(mod_reduce(std::nan(""), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(mod_reduce(INFINITY, 1.0), std::invalid_argument);
}

TEST_CASE("mod_reduce randomized range / multiple / translation invariance") {
    std::mt19937_64 rng(12345);
    auto uni = [&](double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    for (int i = 0; i < 10000; ++i) {
        const double delta = std::exp(uni(-3.0, 3.0));
        const double x = uni(-50.0, 50.0) * delta;
        const double r = mod_reduce(x, delta);
        CHECK(r >= -delta / 2);
        CHECK(r < delta / 2);
        const double m = (x - r) / delta;
        CHECK(std::fabs(m - std::round(m)) <= 1e-9);

        const double a = uni(-20.0, 20.0) * delta;
        const double b = uni(-20.0, 20.0) * delta;
        CHECK(std::fabs(mod_reduce(mod_reduce(a, delta) + b, delta) -
                        mod_reduce(a + b, delta)) <= 1e-9 * delta);
    }
}

TEST_CASE("chebyshev_value recurrence") {
    CHECK(chebyshev_value(0, 0.3) == 1.0);
    CHECK(chebyshev_value(1, 0.7) == 0.7);
    CHECK(chebyshev_value(2, 0.5) == doctest::Approx(-0.5).epsilon(1e-15));
    // T_k(cos t) = cos(k t)
    CHECK(chebyshev_value(7, std::cos(0.4)) == doctest::Approx(std::cos(2.8)).epsilon(1e-12));
    for (int k = 0; k <= 50; ++k)
        for (int i = 0; i <= 40; ++i) {
            const double theta = M_PI * i / 40.0;
            CHECK(std::fabs(chebyshev_value(k, std::cos(theta)) - std::cos(k * theta)) <= 1e-8);
        }
}

TEST_CASE("LaurentPoly arithmetic and trimming") {
    LaurentPoly p({1.0, 2.0, 0.0, 0.0});
    CHECK(p.degree() == 1);  // trailing zeros trimmed
    LaurentPoly q({1.0, -1.0});
    LaurentPoly prod = p * q;  // (1+2z)(1-z) = 1 + z - 2z^2
    REQUIRE(prod.degree() == 2);
    CHECK(prod.coeffs[0] == 1.0);
    CHECK(prod.coeffs[1] == 1.0);
    CHECK(prod.coeffs[2] == -2.0);
    LaurentPoly diff = prod - prod;
    CHECK(diff.degree() == 0);
    CHECK(diff.coeffs[0] == 0.0);
    CHECK(p.shifted(2).coeffs[0] == 0.0);
    CHECK(p.shifted(2).coeffs[2] == 1.0);
    CHECK(p.eval(3.0) == 7.0);
}

TEST_CASE("build_chebyshev_taps small orders match hand expansion") {
    // K=1, a=0: p_1(z) = z^2 - z + 1 -> taps [1, -1], bound 2*(1/2) = 1
    PredictorTaps t1 = build_chebyshev_taps(1, 0.0);
    REQUIRE(t1.taps.size() == 2);
    CHECK(t1.taps[0] == 1.0);
    CHECK(t1.taps[1] == -1.0);
    CHECK(t1.guaranteed_bound == doctest::Approx(1.0).epsilon(1e-15));

    // K=2, a=0: p_2 = z^4 - 2z^3 + 2.5z^2 - 2z + 1
    PredictorTaps t2 = build_chebyshev_taps(2, 0.0);
    REQUIRE(t2.taps.size() == 4);
    CHECK(t2.taps[0] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(t2.taps[1] == doctest::Approx(-2.5).epsilon(1e-15));
    CHECK(t2.taps[2] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(t2.taps[3] == -1.0);
    // p_2(1) = 1 - sum(h) = 2*(1/2)^2
    CHECK(1.0 - (t2.taps[0] + t2.taps[1] + t2.taps[2] + t2.taps[3]) ==
          doctest::Approx(0.5).epsilon(1e-12));

    // K=3, a=0: p_3 = z^6 - 3z^5 + 5.25z^4 - 6.25z^3 + 5.25z^2 - 3z + 1
    PredictorTaps t3 = build_chebyshev_taps(3, 0.0);
    REQUIRE(t3.taps.size() == 6);
    const double expect[6] = {3.0, -5.25, 6.25, -5.25, 3.0, -1.0};
    for (int i = 0; i < 6; ++i) CHECK(t3.taps[i] == doctest::Approx(expect[i]).epsilon(1e-15));

    // K=1, a=1: p_1 = z^2 - 1.5z + 1
    PredictorTaps t1a = build_chebyshev_taps(1, 1.0);
    CHECK(t1a.taps[0] == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(t1a.taps[1] == -1.0);
    CHECK(t1a.guaranteed_bound == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(build_chebyshev_taps(1, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(build_chebyshev_taps(1, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(build_chebyshev_taps(0, 0.0), std::invalid_argument);
}

TEST_CASE("taps structure: monic lead, exact palindromy, value at 1") {
    for (double a : {-1.9, -1.0, 0.0, 1.0, 1.9})
        for (int k : {1, 2, 3, 5, 8, 13, 21, 40}) {
            PredictorTaps t = build_chebyshev_taps(k, a);
            REQUIRE(static_cast<int>(t.taps.size()) == 2 * k);
            CHECK(t.taps[t.taps.size() - 1] == -1.0);
            // coefficient vector of p is [1, -h_1, ..., -h_2K]; palindromy means
            // h_j = h_{2K-j} for 0 < j < 2K and h_2K = -1 against the leading 1
            for (int j = 1; j < k; ++j)
                CHECK(t.taps[static_cast<std::size_t>(j - 1)] ==
                      t.taps[static_cast<std::size_t>(2 * k - j - 1)]);
        }
}

TEST_CASE("taps match the exact rational construction") {
    using namespace modrec_test;
    for (double a_d : {-1.9, -1.0, 0.0, 1.0, 1.9}) {
        const mpq_class a_q(a_d);  // exact rational value of the double
        for (int k : {1, 2, 3, 7, 19, 40}) {
            const std::vector<mpq_class> exact = chebyshev_pk_exact(k, a_q);
            REQUIRE(static_cast<int>(exact.size()) == 2 * k + 1);
            // construction identities hold exactly in rational arithmetic
            CHECK(exact[0] == 1);
            CHECK(exact[exact.size() - 1] == 1);
            for (std::size_t j = 0; j < exact.size(); ++j)
                CHECK(exact[j] == exact[exact.size() - 1 - j]);
            CHECK(eval_exact(exact, mpq_class(1)) == guaranteed_bound_exact(k, a_q));

            // float taps agree coefficient-by-coefficient far below double eps
            PredictorTaps t = build_chebyshev_taps(k, a_d);
            mpq_class max_abs = 0;
            for (const mpq_class& c : exact)
                if (abs(c) > max_abs) max_abs = abs(c);
            const mpq_class rel = pow10_inv(24);
            for (int j = 1; j <= 2 * k; ++j) {
                const mpq_class stored = mpq_class(-t.taps[static_cast<std::size_t>(j - 1)]) +
                                         mpq_class(-t.taps_lo[static_cast<std::size_t>(j - 1)]);
                const mpq_class diff = abs(stored - exact[static_cast<std::size_t>(j)]);
                CHECK(diff <= abs(exact[static_cast<std::size_t>(j)]) * rel + max_abs * pow10_inv(28));
            }
        }
    }
}

TEST_CASE("float tap sums reproduce p(1) up to summation conditioning") {
    // 1 - sum(h) cancels down to 2((2-a)/4)^K; the float sum cannot beat
    // eps * sum|h|, so the tolerance carries that term. The exact-rational
    // comparison above covers the tap values themselves to ~1e-24.
    for (double a : {-1.9, -1.0, 0.0, 1.0, 1.9})
        for (int k = 1; k <= 30; ++k) {
            PredictorTaps t = build_chebyshev_taps(k, a);
            double sum = 0.0, norm1 = 1.0;
            for (double h : t.taps) {
                sum += h;
                norm1 += std::fabs(h);
            }
            CHECK(std::fabs((1.0 - sum) - t.guaranteed_bound) <=
                  1e-9 * t.guaranteed_bound + 64.0 * 0x1.0p-53 * norm1);
        }
}

TEST_CASE("eval_on_unit_circle spot values") {
    PredictorTaps t1 = build_chebyshev_taps(1, 0.0);
    // |(-i)^2 - (-i) + 1| = |i| = 1 at f = 1/4
    CHECK(eval_on_unit_circle(t1, 0.25) == doctest::Approx(1.0).epsilon(1e-12));
    // f = 0: p(1) = 2*((2-a)/4)^K
    CHECK(eval_on_unit_circle(t1, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    // f = 1/2: p(-1) = 3
    CHECK(eval_on_unit_circle(t1, 0.5) == doctest::Approx(3.0).epsilon(1e-12));

    PredictorTaps t6 = build_chebyshev_taps(6, 0.0);
    CHECK(eval_on_unit_circle(t6, 0.0) ==
          doctest::Approx(t6.guaranteed_bound).epsilon(1e-12));
}

TEST_CASE("eval_on_unit_circle agrees with direct coefficient summation") {
    // the direct sum is the independent route; its own rounding floor is
    // ~|p|(-1)*eps so the comparison is made against that scale
    for (double a : {-1.9, -1.0, 0.0, 1.0, 1.9})
        for (int k : {1, 2, 3, 5, 8, 12}) {
            PredictorTaps t = build_chebyshev_taps(k, a);
            double norm1 = 1.0;
            for (double h : t.taps) norm1 += std::fabs(h);
            for (int i = 0; i <= 20; ++i) {
                const double f = 0.5 * i / 20.0;
                std::complex<double> z = std::exp(std::complex<double>(0.0, -2.0 * M_PI * f));
                std::complex<double> acc(1.0, 0.0);
                std::complex<double> zp(1.0, 0.0);
                for (double h : t.taps) {
                    zp *= z;
                    acc -= h * zp;
                }
                const double direct = std::abs(acc);
                const double structural = eval_on_unit_circle(t, f);
                CHECK(std::fabs(direct - structural) <=
                      1e-12 * norm1 * k + 1e-11 * (1.0 + structural));
            }
        }
}

TEST_CASE("in_band_max honours the guaranteed bound") {
    PredictorTaps t1 = build_chebyshev_taps(1, 0.0);
    CHECK(in_band_max(t1, 0.25, 1001) <= 1.0 + 1e-6);
    // equioscillation: the bound is attained (at the band edge/interior peaks)
    CHECK(in_band_max(t1, 0.25, 1001) > 1.0 - 1e-3);

    PredictorTaps t6 = build_chebyshev_taps(6, 0.0);
    CHECK(in_band_max(t6, 0.25, 4097) <= 0.03125 * (1.0 + 1e-6));

    // degenerate two-point grid is just the endpoint pair
    const double edge = std::acos(0.0 / 2.0) / (2.0 * M_PI);
    const double two = in_band_max(t1, edge, 2);
    CHECK(two == doctest::Approx(std::max(eval_on_unit_circle(t1, 0.0),
                                          eval_on_unit_circle(t1, edge))));
    CHECK_THROWS_AS(in_band_max(t1, 0.25, 1), std::invalid_argument);
}
