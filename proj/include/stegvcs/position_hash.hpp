#ifndef STEGVCS_POSITION_HASH_HPP
#define STEGVCS_POSITION_HASH_HPP

#include <cstddef>

namespace stegvcs {

/// Two bit positions inside the lower nibble of a pixel byte. Position 0 is
/// the least significant bit. second_bit always equals (first_bit + 1) mod 4,
/// so position 3 wraps back to 0.
struct PositionPair {
    int first_bit;
    int second_bit;

    bool operator==(const PositionPair&) const = default;
};

/// Computes where the two secret bits of a pixel live, from the pixel's
/// linear index p and its row/column (i, j). Sender and receiver call this
/// with identical arguments, so the function must stay a pure total function:
///
///   first_bit  = (p mod ((i+1) + (j+1))) mod 4
///   second_bit = (first_bit + 1) mod 4
///
/// The modulus base (i+1)+(j+1) is at least 2, so the expression is defined
/// for every pixel.
constexpr PositionPair position_pair(std::size_t p, int i, int j) noexcept {
    const auto base =
        static_cast<std::size_t>(i) + static_cast<std::size_t>(j) + 2;
    const int first = static_cast<int>((p % base) % 4);
    return PositionPair{first, (first + 1) % 4};
}

}  // namespace stegvcs

#endif  // STEGVCS_POSITION_HASH_HPP
