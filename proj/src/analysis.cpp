#include "stegvcs/analysis.hpp"

#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "stegvcs/error.hpp"
#include "stegvcs/shares.hpp"

namespace stegvcs {

HistogramReport histogram(const GrayImage& img) {
    HistogramReport report;
    for (const std::uint8_t v : img.pixels) {
        ++report.counts[v];
        if (in_black_band(v)) {
            ++report.in_black_band;
        } else if (in_white_band(v)) {
            ++report.in_white_band;
        } else {
            ++report.out_of_band;
        }
    }
    return report;
}

BandGapReport band_gap_report(const GrayImage& img) {
    BandGapReport report;
    for (std::size_t p = 0; p < img.pixel_count(); ++p) {
        const int v = img.pixels[p];
        if (in_black_band(v)) {
            if (!report.highest_black || v > *report.highest_black) {
                report.highest_black = v;
            }
        } else if (in_white_band(v)) {
            if (!report.lowest_white || v < *report.lowest_white) {
                report.lowest_white = v;
            }
        } else {
            throw Error(Errc::band_violation,
                        "pixel " + std::to_string(p) + " has value " +
                            std::to_string(v) + ", outside both bands");
        }
    }
    report.gap_low = report.highest_black ? *report.highest_black + 1 : 0;
    report.gap_high = report.lowest_white ? *report.lowest_white - 1 : 255;
    report.gap_width = report.gap_high - report.gap_low + 1;
    return report;
}

int distinct_value_half_encodings(Band band) {
    const int lo = band == Band::black ? 0 : kWhiteBandMin;
    const int hi = band == Band::black ? kBlackBandMax : 255;
    const std::uint8_t noise = band == Band::black ? 255 : 0;
    std::set<std::pair<int, int>> encodings;
    for (int x = lo; x <= hi; ++x) {
        const SplitPixel split =
            split_pixel(static_cast<std::uint8_t>(x), PatternChoice::left);
        const int value1 =
            split.share1.half1 == noise ? split.share1.half2 : split.share1.half1;
        const int value2 =
            split.share2.half1 == noise ? split.share2.half2 : split.share2.half1;
        encodings.emplace(value1, value2);
    }
    return static_cast<int>(encodings.size());
}

std::vector<SchemeGuessProbability> guess_probability() {
    return {
        {"Naor-Shamir (2,2) visual cryptography", 1, 2},
        {"Neural-network visual cryptography (Yue-Chiang)", 1, 2},
        {"Jena-Jena visual cryptography", 1, 2},
        {"Banded grayscale (2,2) scheme (this tool)", 1, 13},
    };
}

std::string render_histogram_kv(const HistogramReport& report) {
    std::ostringstream out;
    out << "total=" << report.total() << "\n"
        << "in_black_band=" << report.in_black_band << "\n"
        << "in_white_band=" << report.in_white_band << "\n"
        << "out_of_band=" << report.out_of_band << "\n";
    return out.str();
}

std::string render_histogram_csv(const HistogramReport& report) {
    std::ostringstream out;
    out << "bin,count\n";
    for (int v = 0; v < 256; ++v) {
        out << v << "," << report.counts[v] << "\n";
    }
    return out.str();
}

std::string render_band_gap_kv(const BandGapReport& report) {
    std::ostringstream out;
    out << "highest_black="
        << (report.highest_black ? std::to_string(*report.highest_black)
                                 : std::string("absent"))
        << "\n"
        << "lowest_white="
        << (report.lowest_white ? std::to_string(*report.lowest_white)
                                : std::string("absent"))
        << "\n"
        << "gap_low=" << report.gap_low << "\n"
        << "gap_high=" << report.gap_high << "\n"
        << "gap_width=" << report.gap_width << "\n";
    return out.str();
}

std::string render_guess_probability_table() {
    std::ostringstream out;
    out << "scheme,single_guess_probability\n";
    for (const auto& row : guess_probability()) {
        out << row.scheme << "," << row.numerator << "/" << row.denominator
            << "\n";
    }
    return out.str();
}

}  // namespace stegvcs
