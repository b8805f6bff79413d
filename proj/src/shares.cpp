#include "stegvcs/shares.hpp"

#include <string>
#include <utility>

#include "stegvcs/error.hpp"

namespace stegvcs {

namespace {

// splitmix64 finalizer over the counter seed + index. Stateless, so the
// pattern for pixel p never depends on how many pixels were drawn before it.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

PatternChoice pattern_choice(std::uint64_t seed, std::size_t pixel_index) {
    const std::uint64_t counter =
        seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(pixel_index) + 1);
    return (mix64(counter) >> 63) ? PatternChoice::right : PatternChoice::left;
}

SplitPixel split_pixel(std::uint8_t x, PatternChoice pattern) {
    if (!in_band(x)) {
        throw Error(Errc::out_of_band,
                    "pixel value " + std::to_string(x) +
                        " lies in the gap 13..242");
    }
    if (in_white_band(x)) {
        const std::uint8_t g = x / 2;
        const std::uint8_t g1 =
            static_cast<std::uint8_t>(x % 2 == 0 ? g + 128 : g + 127);
        const std::uint8_t g2 = static_cast<std::uint8_t>(g + 128);
        if (pattern == PatternChoice::left) {
            return {{g1, 0}, {g2, 0}};
        }
        return {{0, g1}, {0, g2}};
    }
    const std::uint8_t v1 = x / 2;
    const std::uint8_t v2 = static_cast<std::uint8_t>(x % 2 == 0 ? v1 : v1 + 1);
    // The 255 noise sits at opposite positions across the two shares.
    if (pattern == PatternChoice::left) {
        return {{v1, 255}, {255, v2}};
    }
    return {{255, v1}, {v2, 255}};
}

std::pair<Share, Share> generate_shares(const StegoImage& stego,
                                        std::uint64_t seed) {
    GrayImage img1(stego.width * 2, stego.height);
    GrayImage img2(stego.width * 2, stego.height);
    for (std::size_t p = 0; p < stego.pixel_count(); ++p) {
        const SplitPixel split = split_pixel(stego.pixels[p], pattern_choice(seed, p));
        img1.pixels[2 * p] = split.share1.half1;
        img1.pixels[2 * p + 1] = split.share1.half2;
        img2.pixels[2 * p] = split.share2.half1;
        img2.pixels[2 * p + 1] = split.share2.half2;
    }
    return {Share(std::move(img1)), Share(std::move(img2))};
}

PixelPair pair_at(const Share& share, std::size_t pair_index) {
    return {share.pixels[2 * pair_index], share.pixels[2 * pair_index + 1]};
}

}  // namespace stegvcs
