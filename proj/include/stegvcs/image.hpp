#ifndef STEGVCS_IMAGE_HPP
#define STEGVCS_IMAGE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace stegvcs {

// Legal intensity bands of an embedded image. Black cover pixels (0) end up
// in [0, 12]; white cover pixels (255) end up in [243, 255]. The interval
// between them is never produced by the pipeline, which is what makes pixel
// classification unambiguous at the receiver.
inline constexpr int kBlackBandMax = 12;
inline constexpr int kWhiteBandMin = 243;

constexpr bool in_black_band(int value) noexcept {
    return value >= 0 && value <= kBlackBandMax;
}
constexpr bool in_white_band(int value) noexcept {
    return value >= kWhiteBandMin && value <= 255;
}
constexpr bool in_band(int value) noexcept {
    return in_black_band(value) || in_white_band(value);
}

/// Row-major 8-bit grayscale image. Width and height are always >= 1.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0);
    GrayImage(int w, int h, std::vector<std::uint8_t> px);

    std::size_t pixel_count() const noexcept { return pixels.size(); }

    std::uint8_t at(int row, int col) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
    std::uint8_t& at(int row, int col) {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }

    bool operator==(const GrayImage&) const = default;
};

/// A GrayImage whose pixels are all 0 or 255. Construction validates.
struct BinaryImage : GrayImage {
    explicit BinaryImage(GrayImage img);
};

/// A GrayImage whose pixels all lie in [0,12] or [243,255]. Construction
/// validates.
struct StegoImage : GrayImage {
    explicit StegoImage(GrayImage img);
};

/// One of the two m x 2n share images. Pixels come in horizontal pairs;
/// construction only checks the even width, pair contents are validated when
/// the shares are fused (so that corrupted shares can still be loaded and
/// reported pair by pair).
struct Share : GrayImage {
    explicit Share(GrayImage img);

    std::size_t pair_count() const noexcept { return pixels.size() / 2; }
};

/// Retypes img as a BinaryImage; reports the first offending index otherwise.
BinaryImage validate_binary(GrayImage img);

}  // namespace stegvcs

#endif  // STEGVCS_IMAGE_HPP
