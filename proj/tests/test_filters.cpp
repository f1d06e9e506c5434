#include <doctest.h>

#include <cmath>

#include "edmatch/filters.hpp"
#include "helpers.hpp"

using namespace edmatch;

namespace {

// Brute-force correlation with zero padding, for the shift-locality check.
float zero_pad_response(const Kernel& k, const FeatureMap& f, int c, int y, int x) {
    const int r = k.size / 2;
    double acc = 0.0;
    for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
            const int yy = y + dy;
            const int xx = x + dx;
            if (yy < 0 || yy >= f.height() || xx < 0 || xx >= f.width()) continue;
            acc += k.weights[(dy + r) * k.size + dx + r] * f.at(c, yy, xx);
        }
    }
    return static_cast<float>(acc);
}

}  // namespace

TEST_CASE("default_bank contents") {
    const FilterBank one = default_bank(1);
    REQUIRE(one.count() == 1);
    CHECK(one.kernels[0].size == 1);
    CHECK(one.kernels[0].weights[0] == 1.0);

    const FilterBank two = default_bank(2);
    REQUIRE(two.count() == 2);
    const Kernel& plus = two.kernels[1];
    CHECK(plus.size == 3);
    CHECK(plus.weights[0] == 0.0);
    CHECK(plus.weights[1] == doctest::Approx(0.2));
    CHECK(plus.weights[4] == doctest::Approx(0.2));

    const FilterBank full = default_bank(10);
    REQUIRE(full.count() == 10);
    const Kernel& box7 = full.kernels[9];
    CHECK(box7.size == 7);
    for (double w : box7.weights) CHECK(w == doctest::Approx(1.0 / 49.0));

    // every kernel is a normalized mask
    for (const Kernel& k : full.kernels) {
        double sum = 0.0;
        for (double w : k.weights) sum += w;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }

    CHECK_THROWS(default_bank(0));
    CHECK_THROWS(default_bank(11));
}

TEST_CASE("apply: identity and constants") {
    const FeatureMap f = testutil::random_map(2, 5, 4, 7);
    const ResponseStack stack = apply(default_bank(10), f);
    // plane 0 equals the input exactly
    for (int c = 0; c < 2; ++c) {
        const float* p = stack.plane(0, c);
        const float* src = f.channel(c);
        for (int i = 0; i < f.spatial_size(); ++i) CHECK(p[i] == src[i]);
    }
    // averaging masks preserve constants
    FeatureMap constant(1, 6, 6, std::vector<float>(36, 2.5f));
    const ResponseStack cs = apply(default_bank(10), constant);
    for (int k = 0; k < 10; ++k) {
        const float* p = cs.plane(k, 0);
        for (int i = 0; i < 36; ++i) CHECK(std::abs(p[i] - 2.5f) < 1e-6f);
    }
}

TEST_CASE("apply: hand-computed plus filter") {
    FeatureMap f(1, 3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
    const ResponseStack stack = apply(default_bank(2), f);
    // center pixel: (2+4+5+6+8)/5 = 5
    CHECK(stack.plane(1, 0)[4] == doctest::Approx(5.0f));
}

TEST_CASE("apply: interior pixels independent of padding") {
    const FeatureMap f = testutil::random_map(1, 12, 12, 11);
    const FilterBank bank = default_bank(10);
    const ResponseStack stack = apply(bank, f);
    for (int k = 0; k < 10; ++k) {
        for (int y = 3; y < 9; ++y) {
            for (int x = 3; x < 9; ++x) {
                const float zp = zero_pad_response(bank.kernels[k], f, 0, y, x);
                CHECK(stack.plane(k, 0)[y * 12 + x] == doctest::Approx(zp).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("FilterBank validation") {
    FilterBank bad;
    bad.kernels.push_back(Kernel{3, std::vector<double>(9, 1.0 / 9.0)});
    CHECK_THROWS(bad.validate());  // kernel 0 not identity

    FilterBank unnormalized = default_bank(2);
    unnormalized.kernels[1].weights[0] = 0.5;
    CHECK_THROWS(unnormalized.validate());

    CHECK_NOTHROW(default_bank(10).validate());
}
