#ifndef STEGVCS_ANALYSIS_HPP
#define STEGVCS_ANALYSIS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stegvcs/image.hpp"

namespace stegvcs {

struct HistogramReport {
    std::array<std::uint64_t, 256> counts{};
    std::uint64_t in_black_band = 0;
    std::uint64_t in_white_band = 0;
    std::uint64_t out_of_band = 0;

    std::uint64_t total() const noexcept {
        return in_black_band + in_white_band + out_of_band;
    }
};

HistogramReport histogram(const GrayImage& img);

/// The unused intensity interval separating the two bands. highest_black /
/// lowest_white are absent when the image uses only one band; the gap then
/// extends to the respective end of the byte range. For any valid embedded
/// image the gap contains at least [13, 242].
struct BandGapReport {
    std::optional<int> highest_black;
    std::optional<int> lowest_white;
    int gap_low = 0;    // inclusive
    int gap_high = 0;   // inclusive
    int gap_width = 0;  // gap_high - gap_low + 1
};

/// Throws BandViolation (with index) if any pixel lies in 13..242.
BandGapReport band_gap_report(const GrayImage& img);

enum class Band : std::uint8_t { black, white };

/// Number of distinct (share1, share2) value-half encodings over the 13
/// values of a band. Equals the band cardinality 13, which is what backs the
/// 1/13 single-guess probability below.
int distinct_value_half_encodings(Band band);

struct SchemeGuessProbability {
    std::string scheme;
    int numerator;
    int denominator;
};

/// Adversarial single-guess probability per scheme: 1/2 for the binary VCS
/// baselines, 1/13 for this scheme (13 candidate encodings per band).
std::vector<SchemeGuessProbability> guess_probability();

// Rendering. Key-value lines are the machine-readable form; the CSV dump is
// one "bin,count" line per intensity.
std::string render_histogram_kv(const HistogramReport& report);
std::string render_histogram_csv(const HistogramReport& report);
std::string render_band_gap_kv(const BandGapReport& report);
std::string render_guess_probability_table();

}  // namespace stegvcs

#endif  // STEGVCS_ANALYSIS_HPP
