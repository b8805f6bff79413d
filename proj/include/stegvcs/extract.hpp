#ifndef STEGVCS_EXTRACT_HPP
#define STEGVCS_EXTRACT_HPP

#include <cstdint>
#include <utility>

#include "stegvcs/image.hpp"
#include "stegvcs/payload.hpp"
#include "stegvcs/position_hash.hpp"

namespace stegvcs {

/// Reads the bits at pos.first_bit and pos.second_bit; inverse of
/// embed_bit_pair. Throws BandViolation for an out-of-band pixel.
std::pair<bool, bool> extract_bit_pair(std::uint8_t stego_pixel,
                                       PositionPair pos);

/// Recovers the framed payload: 5 header bytes from pixels 0..19, then
/// width * height body bytes at four pixels each. Only the pixels holding
/// framed data are read. Throws BadHeader, BodyOverrun, or BandViolation.
Payload extract_payload(const GrayImage& stego);

/// Restores the pristine binary cover by band thresholding: [243,255] -> 255
/// and [0,12] -> 0. Throws BandViolation (with index) for values in 13..242.
BinaryImage restore_cover(const GrayImage& stego);

}  // namespace stegvcs

#endif  // STEGVCS_EXTRACT_HPP
