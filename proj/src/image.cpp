#include "stegvcs/image.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "stegvcs/error.hpp"

namespace stegvcs {

namespace {

void check_dims(int w, int h) {
    if (w < 1 || h < 1) {
        throw std::invalid_argument("image dimensions must be at least 1x1, got " +
                                    std::to_string(w) + "x" + std::to_string(h));
    }
}

}  // namespace

GrayImage::GrayImage(int w, int h, std::uint8_t fill)
    : width(w), height(h) {
    check_dims(w, h);
    pixels.assign(static_cast<std::size_t>(w) * h, fill);
}

GrayImage::GrayImage(int w, int h, std::vector<std::uint8_t> px)
    : width(w), height(h), pixels(std::move(px)) {
    check_dims(w, h);
    if (pixels.size() != static_cast<std::size_t>(w) * h) {
        throw std::invalid_argument("pixel buffer size " +
                                    std::to_string(pixels.size()) +
                                    " does not match " + std::to_string(w) + "x" +
                                    std::to_string(h));
    }
}

BinaryImage::BinaryImage(GrayImage img) : GrayImage(std::move(img)) {
    for (std::size_t p = 0; p < pixels.size(); ++p) {
        if (pixels[p] != 0 && pixels[p] != 255) {
            throw Error(Errc::not_binary,
                        "pixel " + std::to_string(p) + " has value " +
                            std::to_string(pixels[p]) + ", expected 0 or 255");
        }
    }
}

StegoImage::StegoImage(GrayImage img) : GrayImage(std::move(img)) {
    for (std::size_t p = 0; p < pixels.size(); ++p) {
        if (!in_band(pixels[p])) {
            throw Error(Errc::band_violation,
                        "pixel " + std::to_string(p) + " has value " +
                            std::to_string(pixels[p]) +
                            ", outside [0,12] and [243,255]");
        }
    }
}

Share::Share(GrayImage img) : GrayImage(std::move(img)) {
    if (width % 2 != 0) {
        throw Error(Errc::dimension_mismatch,
                    "share width " + std::to_string(width) +
                        " is odd; shares hold horizontal pixel pairs");
    }
}

BinaryImage validate_binary(GrayImage img) {
    return BinaryImage(std::move(img));
}

}  // namespace stegvcs
