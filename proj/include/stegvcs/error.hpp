#ifndef STEGVCS_ERROR_HPP
#define STEGVCS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace stegvcs {

/// Domain error kinds. Every kind maps to exit code 1 in the CLI;
/// I/O and usage problems are reported separately and map to exit code 2.
enum class Errc {
    malformed_header,
    truncated_data,
    unsupported_maxval,
    not_binary,
    payload_too_large,
    capacity_exceeded,
    out_of_band,
    inconsistent_pair,
    dimension_mismatch,
    band_violation,
    bad_header,
    body_overrun,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
          code_(code),
          detail_(detail) {}

    Errc code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

}  // namespace stegvcs

#endif  // STEGVCS_ERROR_HPP
