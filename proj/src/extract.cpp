#include "stegvcs/extract.hpp"

#include <string>
#include <utility>

#include "stegvcs/error.hpp"

namespace stegvcs {

namespace {

// Reassembles framed byte k from cover pixels 4k..4k+3, mirroring the
// embedding order: the more significant bit of each pair sits at first_bit.
std::uint8_t read_framed_byte(const GrayImage& stego, std::size_t k) {
    std::uint8_t byte = 0;
    for (int t = 0; t < 4; ++t) {
        const std::size_t p = 4 * k + t;
        const int i = static_cast<int>(p / stego.width);
        const int j = static_cast<int>(p % stego.width);
        const auto [b1, b2] = extract_bit_pair(stego.pixels[p], position_pair(p, i, j));
        byte = static_cast<std::uint8_t>(byte | (b1 << (7 - 2 * t)) |
                                         (b2 << (6 - 2 * t)));
    }
    return byte;
}

}  // namespace

std::pair<bool, bool> extract_bit_pair(std::uint8_t stego_pixel,
                                       PositionPair pos) {
    if (!in_band(stego_pixel)) {
        throw Error(Errc::band_violation,
                    "pixel value " + std::to_string(stego_pixel) +
                        " lies in the gap 13..242");
    }
    return {(stego_pixel >> pos.first_bit) & 1,
            (stego_pixel >> pos.second_bit) & 1};
}

Payload extract_payload(const GrayImage& stego) {
    const std::size_t total = stego.pixel_count();
    if (total < 4 * kFrameHeaderBytes) {
        throw Error(Errc::body_overrun,
                    "image has " + std::to_string(total) +
                        " pixels, the frame header alone needs " +
                        std::to_string(4 * kFrameHeaderBytes));
    }

    std::uint8_t header[kFrameHeaderBytes];
    for (std::size_t k = 0; k < kFrameHeaderBytes; ++k) {
        header[k] = read_framed_byte(stego, k);
    }
    const std::uint8_t tag = header[0];
    if (tag != static_cast<std::uint8_t>(PayloadKind::message) &&
        tag != static_cast<std::uint8_t>(PayloadKind::image)) {
        throw Error(Errc::bad_header, "unknown kind tag " + std::to_string(tag));
    }
    Payload payload;
    payload.kind = static_cast<PayloadKind>(tag);
    payload.width = (header[1] << 8) | header[2];
    payload.height = (header[3] << 8) | header[4];
    if (payload.kind == PayloadKind::message && payload.height != 1) {
        throw Error(Errc::bad_header,
                    "message frame with height " + std::to_string(payload.height));
    }

    const std::size_t body_bytes = static_cast<std::size_t>(payload.width) *
                                   static_cast<std::size_t>(payload.height);
    if (4 * (kFrameHeaderBytes + body_bytes) > total) {
        throw Error(Errc::body_overrun,
                    "declared body of " + std::to_string(body_bytes) +
                        " bytes needs " +
                        std::to_string(4 * (kFrameHeaderBytes + body_bytes)) +
                        " pixels, image has " + std::to_string(total));
    }
    payload.body.resize(body_bytes);
    for (std::size_t k = 0; k < body_bytes; ++k) {
        payload.body[k] = read_framed_byte(stego, kFrameHeaderBytes + k);
    }
    return payload;
}

BinaryImage restore_cover(const GrayImage& stego) {
    GrayImage out(stego.width, stego.height);
    for (std::size_t p = 0; p < stego.pixel_count(); ++p) {
        const std::uint8_t v = stego.pixels[p];
        if (in_white_band(v)) {
            out.pixels[p] = 255;
        } else if (in_black_band(v)) {
            out.pixels[p] = 0;
        } else {
            throw Error(Errc::band_violation,
                        "pixel " + std::to_string(p) + " has value " +
                            std::to_string(v) + ", outside both bands");
        }
    }
    return BinaryImage(std::move(out));
}

}  // namespace stegvcs
