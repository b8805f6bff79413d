#include "stegvcs/decode.hpp"

#include <string>
#include <utility>

#include "stegvcs/error.hpp"

namespace stegvcs {

namespace {

std::string pair_text(PixelPair a, PixelPair b) {
    return "share1=(" + std::to_string(a.half1) + "," + std::to_string(a.half2) +
           ") share2=(" + std::to_string(b.half1) + "," +
           std::to_string(b.half2) + ")";
}

[[noreturn]] void reject(PixelPair a, PixelPair b, const std::string& why) {
    throw Error(Errc::inconsistent_pair, why + "; " + pair_text(a, b));
}

// The non-255 half of a black-form pair. Exactly one half must be the 255
// noise and the other must be a value half in [0,6].
int black_value_half(PixelPair p, PixelPair a, PixelPair b) {
    const bool noise1 = p.half1 == 255;
    const bool noise2 = p.half2 == 255;
    if (noise1 == noise2) {
        reject(a, b, "black pair lacks exactly one 255 noise half");
    }
    const int v = noise1 ? p.half2 : p.half1;
    if (v > 6) {
        reject(a, b, "black value half " + std::to_string(v) + " outside [0,6]");
    }
    return v;
}

void check_dims(const Share& s1, const Share& s2) {
    if (s1.width != s2.width || s1.height != s2.height) {
        throw Error(Errc::dimension_mismatch,
                    "share1 is " + std::to_string(s1.width) + "x" +
                        std::to_string(s1.height) + ", share2 is " +
                        std::to_string(s2.width) + "x" +
                        std::to_string(s2.height));
    }
}

}  // namespace

PixelClass classify_pair(PixelPair pair1, PixelPair pair2) {
    return (pair1.half1 == pair2.half1 || pair1.half2 == pair2.half2)
               ? PixelClass::white
               : PixelClass::black;
}

std::uint8_t fuse_pair(PixelPair pair1, PixelPair pair2) {
    if (classify_pair(pair1, pair2) == PixelClass::white) {
        // Noise position: where both shares hold 0.
        int noise_pos;
        if (pair1.half1 == 0 && pair2.half1 == 0) {
            noise_pos = 0;
        } else if (pair1.half2 == 0 && pair2.half2 == 0) {
            noise_pos = 1;
        } else {
            reject(pair1, pair2, "white pair has no common-zero noise half");
        }
        const int a = noise_pos == 0 ? pair1.half2 : pair1.half1;
        const int b = noise_pos == 0 ? pair2.half2 : pair2.half1;
        if (a < 248 || b < 248) {
            reject(pair1, pair2, "white value half outside [248,255]");
        }
        const int value = (a == b) ? a + b - 256 : a + b - 254;
        if (!in_white_band(value)) {
            reject(pair1, pair2, "white fusion left the [243,255] band");
        }
        return static_cast<std::uint8_t>(value);
    }
    const int v1 = black_value_half(pair1, pair1, pair2);
    const int v2 = black_value_half(pair2, pair1, pair2);
    return static_cast<std::uint8_t>(v1 + v2);
}

StegoImage decode_shares(const Share& share1, const Share& share2) {
    check_dims(share1, share2);
    GrayImage out(share1.width / 2, share1.height);
    for (std::size_t p = 0; p < out.pixel_count(); ++p) {
        try {
            out.pixels[p] = fuse_pair(pair_at(share1, p), pair_at(share2, p));
        } catch (const Error& e) {
            throw Error(e.code(), "pair " + std::to_string(p) + ": " + e.detail());
        }
    }
    return StegoImage(std::move(out));
}

GrayImage stack_or(const Share& share1, const Share& share2) {
    check_dims(share1, share2);
    GrayImage out(share1.width, share1.height);
    for (std::size_t p = 0; p < out.pixel_count(); ++p) {
        out.pixels[p] =
            static_cast<std::uint8_t>(share1.pixels[p] | share2.pixels[p]);
    }
    return out;
}

}  // namespace stegvcs
