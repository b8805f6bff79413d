#ifndef STEGVCS_PNM_HPP
#define STEGVCS_PNM_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "stegvcs/image.hpp"

namespace stegvcs {

enum class PnmFormat {
    pbm,        // P4, binary images only
    pgm_ascii,  // P2
    pgm_raw,    // P5
};

/// Parses PBM (P1/P4) and PGM (P2/P5) images. Header comments (#) are
/// skipped. PBM polarity follows the Netpbm convention that 1 means ink:
/// a 1 bit becomes pixel 0 (black), a 0 bit becomes pixel 255 (white).
/// Graymaps must have maxval <= 255.
GrayImage decode_pnm(std::span<const std::uint8_t> bytes);

/// Serializes img so that decode_pnm(encode_pnm(img, f)) == img. The pbm
/// format requires a strictly binary image and writes raw P4; graymaps are
/// written with maxval 255.
std::vector<std::uint8_t> encode_pnm(const GrayImage& img, PnmFormat format);

GrayImage read_pnm_file(const std::filesystem::path& path);
void write_pnm_file(const std::filesystem::path& path, const GrayImage& img,
                    PnmFormat format);

}  // namespace stegvcs

#endif  // STEGVCS_PNM_HPP
