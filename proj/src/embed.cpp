#include "stegvcs/embed.hpp"

#include <string>
#include <utility>

#include "stegvcs/error.hpp"

namespace stegvcs {

namespace {

std::uint8_t set_bit(std::uint8_t value, int bit, bool on) {
    const auto mask = static_cast<std::uint8_t>(1u << bit);
    return on ? static_cast<std::uint8_t>(value | mask)
              : static_cast<std::uint8_t>(value & ~mask);
}

}  // namespace

std::uint8_t embed_bit_pair(std::uint8_t cover_pixel, bool b1, bool b2,
                            PositionPair pos) {
    return set_bit(set_bit(cover_pixel, pos.first_bit, b1), pos.second_bit, b2);
}

std::size_t max_body_bytes(std::size_t cover_pixels) noexcept {
    const std::size_t frame_capacity = cover_pixels / 4;
    return frame_capacity > kFrameHeaderBytes
               ? frame_capacity - kFrameHeaderBytes
               : 0;
}

StegoImage embed(const BinaryImage& cover, const Payload& payload) {
    const auto framed = frame_payload(payload);
    const std::size_t needed = framed.size() * 4;
    if (needed > cover.pixel_count()) {
        throw Error(Errc::capacity_exceeded,
                    "framed payload needs " + std::to_string(needed) +
                        " cover pixels, cover has " +
                        std::to_string(cover.pixel_count()) +
                        " (max body " +
                        std::to_string(max_body_bytes(cover.pixel_count())) +
                        " bytes)");
    }

    GrayImage out = cover;
    for (std::size_t k = 0; k < framed.size(); ++k) {
        const std::uint8_t byte = framed[k];
        for (int t = 0; t < 4; ++t) {
            const std::size_t p = 4 * k + t;
            const int i = static_cast<int>(p / cover.width);
            const int j = static_cast<int>(p % cover.width);
            const bool b1 = (byte >> (7 - 2 * t)) & 1;
            const bool b2 = (byte >> (6 - 2 * t)) & 1;
            out.pixels[p] =
                embed_bit_pair(out.pixels[p], b1, b2, position_pair(p, i, j));
        }
    }
    return StegoImage(std::move(out));
}

}  // namespace stegvcs
