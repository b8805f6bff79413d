#ifndef STEGVCS_SHARES_HPP
#define STEGVCS_SHARES_HPP

#include <cstdint>
#include <utility>

#include "stegvcs/image.hpp"

namespace stegvcs {

/// One horizontal two-pixel group of a share.
struct PixelPair {
    std::uint8_t half1;
    std::uint8_t half2;

    bool operator==(const PixelPair&) const = default;
};

/// Which half of the pair carries the value; the other half carries the
/// noise constant (0 for white pixels, 255 for black pixels).
enum class PatternChoice : std::uint8_t { left, right };

/// The two-pixel groups that one stego pixel expands into, one per share.
struct SplitPixel {
    PixelPair share1;
    PixelPair share2;
};

/// Expands a stego pixel x into its share pairs.
///
/// White band (243..255), g = floor(x/2):
///   even x: both value halves are g + 128
///   odd x:  share1 gets g + 127, share2 gets g + 128
///   noise halves are 0 and sit at the same position in both shares.
/// Black band (0..12), v = floor(x/2):
///   even x: both value halves are v
///   odd x:  share1 gets v, share2 gets v + 1
///   noise halves are 255 and sit at opposite positions across the shares.
///
/// Throws OutOfBand for x in 13..242.
SplitPixel split_pixel(std::uint8_t x, PatternChoice pattern);

/// Pattern for pixel p as a pure function of (seed, p), uniform over
/// {left, right}. Keyed per pixel so share generation is deterministic
/// regardless of evaluation order.
PatternChoice pattern_choice(std::uint64_t seed, std::size_t pixel_index);

/// Expands every stego pixel via split_pixel into two m x 2n shares.
/// Identical (stego, seed) always produce byte-identical shares.
std::pair<Share, Share> generate_shares(const StegoImage& stego,
                                        std::uint64_t seed);

PixelPair pair_at(const Share& share, std::size_t pair_index);

}  // namespace stegvcs

#endif  // STEGVCS_SHARES_HPP
