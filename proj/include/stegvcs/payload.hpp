#ifndef STEGVCS_PAYLOAD_HPP
#define STEGVCS_PAYLOAD_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "stegvcs/image.hpp"

namespace stegvcs {

/// Frame kind tags as serialized in the header byte.
enum class PayloadKind : std::uint8_t {
    message = 0x4D,  // 'M'
    image = 0x49,    // 'I'
};

/// The secret being transported. For messages width is the byte length and
/// height is 1; for images the body carries the pixel bytes verbatim.
struct Payload {
    PayloadKind kind = PayloadKind::message;
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> body;  // width * height bytes

    bool operator==(const Payload&) const = default;
};

Payload message_payload(std::vector<std::uint8_t> bytes);
Payload image_payload(const GrayImage& img);

// Serialized frame layout: kind tag (1 byte), width (2 bytes big-endian),
// height (2 bytes big-endian), then the body. The receiver has no other way
// to learn the payload size.
inline constexpr std::size_t kFrameHeaderBytes = 5;

/// header ++ body. Throws PayloadTooLarge when a dimension exceeds the
/// 16-bit header field.
std::vector<std::uint8_t> frame_payload(const Payload& payload);

/// Inverse of frame_payload. Throws BadHeader for an unknown kind tag or a
/// message frame with height != 1, TruncatedData when the body is short.
Payload unframe_payload(std::span<const std::uint8_t> framed);

}  // namespace stegvcs

#endif  // STEGVCS_PAYLOAD_HPP
