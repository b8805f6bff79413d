#ifndef STEGVCS_EMBED_HPP
#define STEGVCS_EMBED_HPP

#include <cstdint>

#include "stegvcs/image.hpp"
#include "stegvcs/payload.hpp"
#include "stegvcs/position_hash.hpp"

namespace stegvcs {

/// Writes b1 at pos.first_bit and b2 at pos.second_bit of cover_pixel.
/// With cover_pixel in {0, 255} the result lands in [0,12] or [243,255]:
/// two lower-nibble bits can perturb a byte by at most 8 + 4 = 12.
std::uint8_t embed_bit_pair(std::uint8_t cover_pixel, bool b1, bool b2,
                            PositionPair pos);

/// Embeds the framed payload two bits per cover pixel, four pixels per
/// framed byte, in row-major order starting at pixel 0. Byte k spans pixels
/// 4k..4k+3; its bit pairs (7,6), (5,4), (3,2), (1,0) go to those pixels in
/// order, with the more significant bit of each pair at first_bit. Pixels
/// beyond the framed data are copied unchanged.
///
/// Throws CapacityExceeded unless 4 * (5 + body size) <= width * height.
StegoImage embed(const BinaryImage& cover, const Payload& payload);

/// Largest payload body that fits a cover of the given pixel count, after
/// the 5 frame header bytes. Negative capacities clamp to 0.
std::size_t max_body_bytes(std::size_t cover_pixels) noexcept;

}  // namespace stegvcs

#endif  // STEGVCS_EMBED_HPP
