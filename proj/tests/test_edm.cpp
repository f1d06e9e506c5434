#include <doctest.h>

#include <cmath>

#include "edmatch/edm.hpp"
#include "edmatch/ehs.hpp"
#include "edmatch/gaussian.hpp"
#include "edmatch/metrics.hpp"
#include "helpers.hpp"

using namespace edmatch;

TEST_CASE("edm self-transfer preserves moments") {
    const FeatureMap f = testutil::random_map(4, 10, 10, 101);
    const FeatureMap out = edm(f, f);
    CHECK(out.same_shape(f));
    const ChannelStats sa = channel_stats(f);
    const ChannelStats sb = channel_stats(out);
    for (int c = 0; c < 4; ++c) {
        CHECK(std::abs(sa.mean[c] - sb.mean[c]) < 1e-4);
        CHECK(std::abs(sa.std[c] - sb.std[c]) < 1e-4);
    }
    const Matrix ca = covariance(f);
    const Matrix cb = covariance(out);
    double err = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double d = ca(i, j) - cb(i, j);
            err += d * d;
        }
    CHECK(std::sqrt(err) <= 1e-4 * ca.frobenius_norm());
}

TEST_CASE("edm single-channel example") {
    FeatureMap content(1, 1, 3, {3, 1, 2});
    FeatureMap style(1, 1, 3, {10, 30, 20});
    EdmConfig cfg;
    cfg.filter_count = 1;
    FeatureMap step1;
    const FeatureMap out = edm(content, style, cfg, &step1);
    CHECK(flatten_channel(step1, 0) == std::vector<float>{30, 10, 20});
    // single channel: whiten then color against the same variance/mean is
    // the identity up to rounding
    CHECK(out.data()[0] == doctest::Approx(30.0f).epsilon(1e-4));
    CHECK(out.data()[1] == doctest::Approx(10.0f).epsilon(1e-4));
    CHECK(out.data()[2] == doctest::Approx(20.0f).epsilon(1e-4));
}

TEST_CASE("edm step-1 intermediate is an exact permutation of style") {
    const FeatureMap c = testutil::image_like_map(3, 12, 12, 103);
    const FeatureMap s = testutil::image_like_map(3, 12, 12, 104);
    FeatureMap step1;
    (void)edm(c, s, {}, &step1);
    for (int ch = 0; ch < 3; ++ch) {
        CHECK(testutil::sorted_copy(step1.channel(ch), step1.spatial_size()) ==
              testutil::sorted_copy(s.channel(ch), s.spatial_size()));
    }
}

TEST_CASE("edm channel mismatch") {
    const FeatureMap c = testutil::random_map(2, 4, 4, 105);
    const FeatureMap s = testutil::random_map(3, 4, 4, 106);
    CHECK_THROWS(edm(c, s));
}

TEST_CASE("edm determinism") {
    const FeatureMap c = testutil::random_map(5, 9, 9, 107);
    const FeatureMap s = testutil::random_map(5, 9, 9, 108);
    const FeatureMap a = edm(c, s);
    const FeatureMap b = edm(c, s);
    CHECK(a.data() == b.data());
}

TEST_CASE("strength") {
    const FeatureMap c = testutil::random_map(2, 4, 4, 109);
    const FeatureMap s = testutil::random_map(2, 4, 4, 110);
    CHECK(strength(c, s, 0.0).data() == c.data());  // bit-exact
    CHECK(strength(c, s, 1.0).data() == s.data());

    FeatureMap zero(1, 1, 2, {0, 0});
    FeatureMap two(1, 1, 2, {2, 2});
    const FeatureMap mid = strength(zero, two, 0.5);
    CHECK(flatten_channel(mid, 0) == std::vector<float>{1, 1});

    // linearity: strength(c,s,a) + strength(c,s,1-a) == c + s
    const FeatureMap p = strength(c, s, 0.3);
    const FeatureMap q = strength(c, s, 0.7);
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(p.data()[i] + q.data()[i] ==
              doctest::Approx(c.data()[i] + s.data()[i]).epsilon(1e-6));
    }

    FeatureMap other(2, 5, 4, std::vector<float>(40, 0.0f));
    CHECK_THROWS(strength(c, other, 0.5));
}

TEST_CASE("interpolate") {
    const FeatureMap c = testutil::random_map(3, 6, 6, 111);
    const FeatureMap s1 = testutil::random_map(3, 6, 6, 112);
    const FeatureMap s2 = testutil::random_map(3, 6, 6, 113);
    EdmConfig cfg;
    cfg.filter_count = 3;

    const FeatureMap single = edm(c, s1, cfg);
    CHECK(interpolate(c, {s1, s2}, {1.0, 0.0}, cfg).data() == single.data());

    // degenerate pair: both styles identical
    const FeatureMap half = interpolate(c, {s1, s1}, {0.5, 0.5}, cfg);
    for (std::size_t i = 0; i < half.size(); ++i) {
        CHECK(half.data()[i] == doctest::Approx(single.data()[i]).epsilon(1e-6));
    }

    // convex combination against independently recomputed parts
    const FeatureMap e1 = edm(c, s1, cfg);
    const FeatureMap e2 = edm(c, s2, cfg);
    const FeatureMap mix = interpolate(c, {s1, s2}, {0.3, 0.7}, cfg);
    for (std::size_t i = 0; i < mix.size(); ++i) {
        const double expected = 0.3 * e1.data()[i] + 0.7 * e2.data()[i];
        CHECK(mix.data()[i] == doctest::Approx(expected).epsilon(1e-6));
    }

    CHECK_THROWS(interpolate(c, {}, {}, cfg));
    CHECK_THROWS(interpolate(c, {s1, s2}, {0.5, 0.6}, cfg));
    CHECK_THROWS(interpolate(c, {s1, s2}, {1.5, -0.5}, cfg));
}

TEST_CASE("edm moves the distribution closer than the inputs") {
    int wins = 0;
    const int trials = 20;
    for (int t = 0; t < trials; ++t) {
        const FeatureMap c = testutil::random_map(8, 16, 16, 1000 + t);
        const FeatureMap s = testutil::random_map(8, 16, 16, 2000 + t, -2.0f, 1.5f);
        SwdConfig cfg;
        cfg.seed = 7;
        const double before = swd(c, s, cfg);
        const double after_edm = swd(edm(c, s), s, cfg);
        const double after_adain = swd(adain(c, s), s, cfg);
        CHECK(after_edm < before);
        if (after_edm <= after_adain) ++wins;
    }
    CHECK(wins * 2 > trials);  // strict majority
}
