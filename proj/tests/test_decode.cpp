#include <doctest.h>

#include <optional>
#include <random>
#include <vector>

#include "stegvcs/decode.hpp"
#include "stegvcs/error.hpp"
#include "stegvcs/shares.hpp"
#include "test_util.hpp"

using namespace stegvcs;
using test_util::thrown_code;

namespace {

const std::vector<int> kBandValues = [] {
    std::vector<int> v;
    for (int x = 0; x <= 255; ++x) {
        if (in_band(x)) v.push_back(x);
    }
    return v;
}();

// Independent fusion oracle: invert split_pixel by searching the whole band
// domain for sources consistent with the observed pair of pairs.
std::optional<int> brute_force_source(PixelPair p1, PixelPair p2) {
    std::optional<int> found;
    for (const int x : kBandValues) {
        for (const auto pattern : {PatternChoice::left, PatternChoice::right}) {
            const SplitPixel split =
                split_pixel(static_cast<std::uint8_t>(x), pattern);
            if (split.share1 == p1 && split.share2 == p2) {
                if (found && *found != x) return std::nullopt;  // ambiguous
                found = x;
            }
        }
    }
    return found;
}

}  // namespace

TEST_CASE("classification golden values") {
    CHECK(classify_pair({248, 0}, {249, 0}) == PixelClass::white);
    CHECK(classify_pair({250, 0}, {250, 0}) == PixelClass::white);
    CHECK(classify_pair({0, 255}, {255, 0}) == PixelClass::black);
}

TEST_CASE("fusion golden values") {
    CHECK(fuse_pair({248, 0}, {249, 0}) == 243);  // odd white: 248+249-254
    CHECK(fuse_pair({250, 0}, {250, 0}) == 244);  // even white: 250+250-256
    CHECK(fuse_pair({6, 255}, {255, 6}) == 12);
    CHECK(fuse_pair({0, 255}, {255, 0}) == 0);
}

TEST_CASE("exhaustive fusion identity over 26 values x 2 patterns") {
    int cases = 0;
    for (const int x : kBandValues) {
        for (const auto pattern : {PatternChoice::left, PatternChoice::right}) {
            const SplitPixel split =
                split_pixel(static_cast<std::uint8_t>(x), pattern);
            CHECK(fuse_pair(split.share1, split.share2) == x);
            CHECK(classify_pair(split.share1, split.share2) ==
                  (in_white_band(x) ? PixelClass::white : PixelClass::black));
            ++cases;
        }
    }
    CHECK(cases == 52);
}

TEST_CASE("fusion agrees with the brute-force inversion oracle") {
    for (const int x : kBandValues) {
        for (const auto pattern : {PatternChoice::left, PatternChoice::right}) {
            const SplitPixel split =
                split_pixel(static_cast<std::uint8_t>(x), pattern);
            const auto source = brute_force_source(split.share1, split.share2);
            REQUIRE(source.has_value());
            CHECK(*source == x);
            CHECK(fuse_pair(split.share1, split.share2) == *source);
        }
    }
}

TEST_CASE("corrupted halves are rejected, not repaired") {
    // Spec'd corruption case: a black pair's 255 noise rewritten to 200.
    CHECK(thrown_code([] { fuse_pair({0, 200}, {255, 0}); }) ==
          Errc::inconsistent_pair);
    // White value half out of range.
    CHECK(thrown_code([] { fuse_pair({240, 0}, {249, 0}); }) ==
          Errc::inconsistent_pair);
    // Equal halves but no common-zero noise position.
    CHECK(thrown_code([] { fuse_pair({250, 3}, {250, 7}); }) ==
          Errc::inconsistent_pair);
    // Even-form sum that would land below the white band.
    CHECK(thrown_code([] { fuse_pair({248, 0}, {248, 0}); }) ==
          Errc::inconsistent_pair);
}

TEST_CASE("decode_shares reports the offending pair index") {
    std::mt19937_64 rng(47);
    const StegoImage stego = test_util::random_stego_image(rng, 8, 8);
    auto [share1, share2] = generate_shares(stego, 5);

    // Find a black pair and corrupt one 255 noise half to 200.
    std::size_t target = 0;
    while (!in_black_band(stego.pixels[target])) ++target;
    Share corrupted = share2;
    std::size_t half_index = 2 * target;
    if (corrupted.pixels[half_index] != 255) ++half_index;
    corrupted.pixels[half_index] = 200;

    try {
        decode_shares(share1, corrupted);
        FAIL("expected InconsistentPair");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::inconsistent_pair);
        CHECK(e.detail().find("pair " + std::to_string(target)) !=
              std::string::npos);
    }
}

TEST_CASE("decode inverts generate for random stego images") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const StegoImage stego = test_util::random_stego_image(rng, 64, 64);
        const auto [share1, share2] = generate_shares(stego, rng());
        const StegoImage decoded = decode_shares(share1, share2);
        CHECK(static_cast<const GrayImage&>(decoded) ==
              static_cast<const GrayImage&>(stego));
    }
}

TEST_CASE("shares of different sizes cannot be fused or stacked") {
    const Share a{GrayImage(4, 2)};
    const Share b{GrayImage(4, 3)};
    CHECK(thrown_code([&] { decode_shares(a, b); }) == Errc::dimension_mismatch);
    CHECK(thrown_code([&] { stack_or(a, b); }) == Errc::dimension_mismatch);
}

TEST_CASE("stack_or golden values") {
    const Share s1{GrayImage(4, 1, {0, 255, 248, 0})};
    const Share s2{GrayImage(4, 1, {255, 0, 249, 0})};
    const GrayImage overlay = stack_or(s1, s2);
    CHECK(overlay.pixels == std::vector<std::uint8_t>{255, 255, 249, 0});
}

TEST_CASE("thresholded overlay separates black and white sources") {
    std::mt19937_64 rng(59);
    const StegoImage stego = test_util::random_stego_image(rng, 32, 32);
    const auto [share1, share2] = generate_shares(stego, 77);
    const GrayImage overlay = stack_or(share1, share2);
    for (std::size_t p = 0; p < stego.pixel_count(); ++p) {
        const int weight = (overlay.pixels[2 * p] >= 243) +
                           (overlay.pixels[2 * p + 1] >= 243);
        if (in_black_band(stego.pixels[p])) {
            CHECK(weight == 2);
        } else {
            CHECK(weight <= 1);
        }
    }
}
