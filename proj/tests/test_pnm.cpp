#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "stegvcs/error.hpp"
#include "stegvcs/pnm.hpp"
#include "test_util.hpp"

using namespace stegvcs;
using test_util::thrown_code;

namespace {

std::vector<std::uint8_t> bytes(const std::string& s) {
    return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("P2 decode") {
    const GrayImage img = decode_pnm(bytes("P2\n2 1\n255\n0 255\n"));
    CHECK(img.width == 2);
    CHECK(img.height == 1);
    CHECK(img.pixels == std::vector<std::uint8_t>{0, 255});
}

TEST_CASE("P1 decode maps 1 to black") {
    const GrayImage img = decode_pnm(bytes("P1\n2 1\n1 0\n"));
    CHECK(img.pixels == std::vector<std::uint8_t>{0, 255});
}

TEST_CASE("P1 digits may be packed without separators") {
    const GrayImage img = decode_pnm(bytes("P1\n4 1\n1010"));
    CHECK(img.pixels == std::vector<std::uint8_t>{0, 255, 0, 255});
}

TEST_CASE("truncated sample data is rejected") {
    CHECK(thrown_code([] {
              decode_pnm(bytes("P2\n4 4\n255\n0 1 2 3 4 5 6 7 8 9 10 11\n"));
          }) == Errc::truncated_data);
    CHECK(thrown_code([] { decode_pnm(bytes("P5\n3 2\n255\nabcde")); }) ==
          Errc::truncated_data);
    CHECK(thrown_code([] { decode_pnm(bytes("P1\n3 2\n1 0 1\n")); }) ==
          Errc::truncated_data);
    CHECK(thrown_code([] { decode_pnm(bytes(std::string("P4\n9 2\n") + "\xFF\xFF\xFF")); }) ==
          Errc::truncated_data);
}

TEST_CASE("header comments are skipped") {
    const GrayImage img = decode_pnm(
        bytes("P2 # graymap\n# a comment line\n2 1 # dims\n255\n7 8\n"));
    CHECK(img.pixels == std::vector<std::uint8_t>{7, 8});
}

TEST_CASE("bad magic and bad dims are malformed") {
    CHECK(thrown_code([] { decode_pnm(bytes("Q5\n1 1\n255\nx")); }) ==
          Errc::malformed_header);
    CHECK(thrown_code([] { decode_pnm(bytes("P3\n1 1\n255\n0 0 0")); }) ==
          Errc::malformed_header);
    CHECK(thrown_code([] { decode_pnm(bytes("P2\n0 1\n255\n")); }) ==
          Errc::malformed_header);
    CHECK(thrown_code([] { decode_pnm(bytes("P2\n2 x\n255\n0 0")); }) ==
          Errc::malformed_header);
    // Absurd totals are rejected before any allocation happens.
    CHECK(thrown_code([] {
              decode_pnm(bytes("P5\n1048576 1048576\n255\n"));
          }) == Errc::malformed_header);
}

TEST_CASE("maxval above 255 is unsupported") {
    CHECK(thrown_code([] { decode_pnm(bytes("P2\n1 1\n65535\n1000")); }) ==
          Errc::unsupported_maxval);
    CHECK(thrown_code([] { decode_pnm(bytes("P5\n1 1\n256\nxx")); }) ==
          Errc::unsupported_maxval);
}

TEST_CASE("P5 encode layout is exact") {
    const auto out = encode_pnm(GrayImage(1, 1, {243}), PnmFormat::pgm_raw);
    std::vector<std::uint8_t> expected = bytes("P5\n1 1\n255\n");
    expected.push_back(243);
    CHECK(out == expected);
}

TEST_CASE("pbm encoding requires a binary image") {
    CHECK(thrown_code([] { encode_pnm(GrayImage(1, 1, {7}), PnmFormat::pbm); }) ==
          Errc::not_binary);
}

TEST_CASE("raw graymap data may start with whitespace-looking bytes") {
    const GrayImage img(1, 2, {'\n', ' '});
    CHECK(decode_pnm(encode_pnm(img, PnmFormat::pgm_raw)) == img);
}

TEST_CASE("round trip: random gray images through both PGM formats") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int w = 1 + static_cast<int>(rng() % 64);
        const int h = 1 + static_cast<int>(rng() % 64);
        GrayImage img(w, h);
        for (auto& px : img.pixels) px = static_cast<std::uint8_t>(rng());
        CHECK(decode_pnm(encode_pnm(img, PnmFormat::pgm_raw)) == img);
        CHECK(decode_pnm(encode_pnm(img, PnmFormat::pgm_ascii)) == img);
    }
}

TEST_CASE("round trip: binary images through PBM, including ragged widths") {
    std::mt19937_64 rng(13);
    for (int w : {1, 7, 8, 9, 10, 31, 64}) {
        const BinaryImage img = test_util::random_binary_image(rng, w, 5);
        const auto encoded = encode_pnm(img, PnmFormat::pbm);
        CHECK(decode_pnm(encoded) == static_cast<const GrayImage&>(img));
    }
}
