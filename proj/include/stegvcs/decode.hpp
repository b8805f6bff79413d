#ifndef STEGVCS_DECODE_HPP
#define STEGVCS_DECODE_HPP

#include <cstdint>

#include "stegvcs/image.hpp"
#include "stegvcs/shares.hpp"

namespace stegvcs {

enum class PixelClass : std::uint8_t { black, white };

/// White iff the shares agree on at least one half of the pair. Valid white
/// pairs always agree at the noise position (both 0); valid black pairs
/// never agree (a value half in [0,6] cannot equal the 255 noise).
PixelClass classify_pair(PixelPair pair1, PixelPair pair2);

/// Reconstructs the stego pixel from its two share pairs.
///
/// White: the noise position is where both shares hold 0; with a, b the
/// other two halves, the pixel is a + b - 256 when a == b (even source) and
/// a + b - 254 otherwise (odd source).
/// Black: the pixel is the sum of the two non-255 halves.
///
/// Throws InconsistentPair when the pairs match neither form; corruption is
/// reported, never repaired.
std::uint8_t fuse_pair(PixelPair pair1, PixelPair pair2);

/// Fuses pair p of the shares into pixel p of the m x n stego image.
/// Throws DimensionMismatch or InconsistentPair (with the pixel index).
StegoImage decode_shares(const Share& share1, const Share& share2);

/// Bitwise OR of the aligned shares, the transparency-stacking model. Black
/// source pairs come out (255, 255); white pairs keep one 0 half.
GrayImage stack_or(const Share& share1, const Share& share2);

}  // namespace stegvcs

#endif  // STEGVCS_DECODE_HPP
