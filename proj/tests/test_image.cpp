#include <doctest.h>

#include <stdexcept>

#include "stegvcs/error.hpp"
#include "stegvcs/image.hpp"
#include "test_util.hpp"

using namespace stegvcs;
using test_util::thrown_code;

TEST_CASE("band predicates") {
    CHECK(in_black_band(0));
    CHECK(in_black_band(12));
    CHECK_FALSE(in_black_band(13));
    CHECK(in_white_band(243));
    CHECK(in_white_band(255));
    CHECK_FALSE(in_white_band(242));
    CHECK_FALSE(in_band(100));
}

TEST_CASE("gray image rejects empty dimensions") {
    CHECK_THROWS_AS(GrayImage(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(GrayImage(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(GrayImage(3, 2, std::vector<std::uint8_t>{1, 2, 3}),
                    std::invalid_argument);
}

TEST_CASE("validate_binary accepts strict 0/255 images") {
    const BinaryImage img =
        validate_binary(GrayImage(2, 2, {0, 255, 255, 0}));
    CHECK(img.pixels == std::vector<std::uint8_t>{0, 255, 255, 0});
}

TEST_CASE("validate_binary reports the first offending index and value") {
    try {
        validate_binary(GrayImage(2, 1, {0, 254}));
        FAIL("expected NotBinary");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_binary);
        CHECK(e.detail().find("pixel 1") != std::string::npos);
        CHECK(e.detail().find("254") != std::string::npos);
    }
}

TEST_CASE("stego image construction enforces the band invariant") {
    CHECK_NOTHROW(StegoImage(GrayImage(2, 2, {0, 12, 243, 255})));
    CHECK(thrown_code([] { StegoImage(GrayImage(1, 2, {0, 100})); }) ==
          Errc::band_violation);
    CHECK(thrown_code([] { StegoImage(GrayImage(1, 1, {13})); }) ==
          Errc::band_violation);
    CHECK(thrown_code([] { StegoImage(GrayImage(1, 1, {242})); }) ==
          Errc::band_violation);
}

TEST_CASE("shares must have even width") {
    CHECK_NOTHROW(Share(GrayImage(4, 2)));
    CHECK(thrown_code([] { Share{GrayImage(3, 2)}; }) ==
          Errc::dimension_mismatch);
}
