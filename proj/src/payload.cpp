#include "stegvcs/payload.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "stegvcs/error.hpp"

namespace stegvcs {

namespace {

constexpr int kMaxFrameDim = 0xFFFF;

void check_invariants(const Payload& p) {
    if (p.width < 0 || p.height < 0) {
        throw std::invalid_argument("payload dimensions must be non-negative");
    }
    if (p.kind == PayloadKind::message && p.height != 1) {
        throw std::invalid_argument("message payloads must have height 1");
    }
    if (p.body.size() !=
        static_cast<std::size_t>(p.width) * static_cast<std::size_t>(p.height)) {
        throw std::invalid_argument(
            "payload body size " + std::to_string(p.body.size()) +
            " does not match " + std::to_string(p.width) + "x" +
            std::to_string(p.height));
    }
}

}  // namespace

Payload message_payload(std::vector<std::uint8_t> bytes) {
    Payload p;
    p.kind = PayloadKind::message;
    p.width = static_cast<int>(bytes.size());
    p.height = 1;
    p.body = std::move(bytes);
    return p;
}

Payload image_payload(const GrayImage& img) {
    Payload p;
    p.kind = PayloadKind::image;
    p.width = img.width;
    p.height = img.height;
    p.body = img.pixels;
    return p;
}

std::vector<std::uint8_t> frame_payload(const Payload& payload) {
    check_invariants(payload);
    if (payload.width > kMaxFrameDim || payload.height > kMaxFrameDim) {
        throw Error(Errc::payload_too_large,
                    "payload dimensions " + std::to_string(payload.width) + "x" +
                        std::to_string(payload.height) +
                        " exceed the 16-bit header fields");
    }
    std::vector<std::uint8_t> out;
    out.reserve(kFrameHeaderBytes + payload.body.size());
    out.push_back(static_cast<std::uint8_t>(payload.kind));
    out.push_back(static_cast<std::uint8_t>(payload.width >> 8));
    out.push_back(static_cast<std::uint8_t>(payload.width & 0xFF));
    out.push_back(static_cast<std::uint8_t>(payload.height >> 8));
    out.push_back(static_cast<std::uint8_t>(payload.height & 0xFF));
    out.insert(out.end(), payload.body.begin(), payload.body.end());
    return out;
}

Payload unframe_payload(std::span<const std::uint8_t> framed) {
    if (framed.size() < kFrameHeaderBytes) {
        throw Error(Errc::bad_header, "frame shorter than the 5-byte header");
    }
    const std::uint8_t tag = framed[0];
    if (tag != static_cast<std::uint8_t>(PayloadKind::message) &&
        tag != static_cast<std::uint8_t>(PayloadKind::image)) {
        throw Error(Errc::bad_header,
                    "unknown kind tag 0x" + [tag] {
                        constexpr char hex[] = "0123456789ABCDEF";
                        return std::string{hex[tag >> 4], hex[tag & 0xF]};
                    }());
    }
    Payload p;
    p.kind = static_cast<PayloadKind>(tag);
    p.width = (framed[1] << 8) | framed[2];
    p.height = (framed[3] << 8) | framed[4];
    if (p.kind == PayloadKind::message && p.height != 1) {
        throw Error(Errc::bad_header, "message frame with height " +
                                          std::to_string(p.height) +
                                          ", expected 1");
    }
    const std::size_t body_size =
        static_cast<std::size_t>(p.width) * static_cast<std::size_t>(p.height);
    if (framed.size() - kFrameHeaderBytes < body_size) {
        throw Error(Errc::truncated_data,
                    "frame declares " + std::to_string(body_size) +
                        " body bytes but carries " +
                        std::to_string(framed.size() - kFrameHeaderBytes));
    }
    p.body.assign(framed.begin() + kFrameHeaderBytes,
                  framed.begin() + kFrameHeaderBytes + body_size);
    return p;
}

}  // namespace stegvcs
