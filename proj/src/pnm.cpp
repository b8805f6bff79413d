#include "stegvcs/pnm.hpp"

#include <cctype>
#include <fstream>
#include <string>

#include "stegvcs/error.hpp"

namespace stegvcs {

namespace {

constexpr int kMaxDimension = 1 << 20;
constexpr long long kMaxPixels = 1LL << 26;

bool is_pnm_space(int c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
           c == '\f';
}

// Cursor over the encoded bytes. Comments run from '#' to end of line and
// may appear anywhere whitespace may.
class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    bool eof() const { return pos_ >= bytes_.size(); }

    int peek() const { return eof() ? -1 : bytes_[pos_]; }

    int get() { return eof() ? -1 : bytes_[pos_++]; }

    void skip_space_and_comments() {
        while (!eof()) {
            if (is_pnm_space(peek())) {
                ++pos_;
            } else if (peek() == '#') {
                while (!eof() && get() != '\n') {
                }
            } else {
                break;
            }
        }
    }

    std::string token() {
        skip_space_and_comments();
        std::string t;
        while (!eof() && !is_pnm_space(peek()) && peek() != '#') {
            t.push_back(static_cast<char>(get()));
        }
        return t;
    }

    long number(const char* what) {
        const std::string t = token();
        if (t.empty()) {
            throw Error(Errc::malformed_header,
                        std::string("missing ") + what + " in header");
        }
        long value = 0;
        for (char c : t) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw Error(Errc::malformed_header, std::string("bad ") + what +
                                                        " token '" + t + "'");
            }
            value = value * 10 + (c - '0');
            if (value > 0x7FFFFFFFL) {
                throw Error(Errc::malformed_header,
                            std::string(what) + " out of range");
            }
        }
        return value;
    }

    std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

void check_decoded_dims(long w, long h) {
    if (w < 1 || h < 1 || w > kMaxDimension || h > kMaxDimension ||
        static_cast<long long>(w) * h > kMaxPixels) {
        throw Error(Errc::malformed_header,
                    "bad dimensions " + std::to_string(w) + "x" +
                        std::to_string(h));
    }
}

GrayImage decode_p1(Reader& r, int w, int h) {
    GrayImage img(w, h);
    std::size_t got = 0;
    const std::size_t need = img.pixel_count();
    // P1 digits need not be whitespace-separated.
    while (got < need) {
        r.skip_space_and_comments();
        const int c = r.get();
        if (c < 0) {
            throw Error(Errc::truncated_data,
                        "expected " + std::to_string(need) + " bits, got " +
                            std::to_string(got));
        }
        if (c == '0') {
            img.pixels[got++] = 255;
        } else if (c == '1') {
            img.pixels[got++] = 0;
        } else {
            throw Error(Errc::malformed_header,
                        "unexpected character in P1 data");
        }
    }
    return img;
}

GrayImage decode_p2(Reader& r, int w, int h, long maxval) {
    GrayImage img(w, h);
    for (std::size_t got = 0; got < img.pixel_count(); ++got) {
        r.skip_space_and_comments();
        if (r.eof()) {
            throw Error(Errc::truncated_data,
                        "expected " + std::to_string(img.pixel_count()) +
                            " samples, got " + std::to_string(got));
        }
        const long v = r.number("sample");
        if (v > maxval) {
            throw Error(Errc::malformed_header,
                        "sample " + std::to_string(v) + " exceeds maxval " +
                            std::to_string(maxval));
        }
        img.pixels[got] = static_cast<std::uint8_t>(v);
    }
    return img;
}

GrayImage decode_p4(Reader& r, int w, int h) {
    // One whitespace byte terminates the header before the packed rows.
    if (!is_pnm_space(r.get())) {
        throw Error(Errc::malformed_header, "missing whitespace before P4 data");
    }
    const auto data = r.rest();
    const std::size_t row_bytes = (static_cast<std::size_t>(w) + 7) / 8;
    if (data.size() < row_bytes * h) {
        throw Error(Errc::truncated_data,
                    "expected " + std::to_string(row_bytes * h) +
                        " data bytes, got " + std::to_string(data.size()));
    }
    GrayImage img(w, h);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            const std::uint8_t byte = data[i * row_bytes + j / 8];
            const int bit = (byte >> (7 - j % 8)) & 1;
            img.at(i, j) = bit ? 0 : 255;
        }
    }
    return img;
}

GrayImage decode_p5(Reader& r, int w, int h) {
    if (!is_pnm_space(r.get())) {
        throw Error(Errc::malformed_header, "missing whitespace before P5 data");
    }
    const auto data = r.rest();
    GrayImage img(w, h);
    if (data.size() < img.pixel_count()) {
        throw Error(Errc::truncated_data,
                    "expected " + std::to_string(img.pixel_count()) +
                        " data bytes, got " + std::to_string(data.size()));
    }
    std::copy_n(data.begin(), img.pixel_count(), img.pixels.begin());
    return img;
}

void append(std::vector<std::uint8_t>& out, const std::string& s) {
    out.insert(out.end(), s.begin(), s.end());
}

std::string dims_header(const GrayImage& img) {
    return std::to_string(img.width) + " " + std::to_string(img.height) + "\n";
}

}  // namespace

GrayImage decode_pnm(std::span<const std::uint8_t> bytes) {
    Reader r(bytes);
    const std::string magic = r.token();
    if (magic.size() != 2 || magic[0] != 'P') {
        throw Error(Errc::malformed_header, "not a PNM file (magic '" + magic + "')");
    }
    const char type = magic[1];
    if (type != '1' && type != '2' && type != '4' && type != '5') {
        throw Error(Errc::malformed_header,
                    "unsupported PNM type P" + std::string(1, type) +
                        " (only P1/P2/P4/P5)");
    }
    const long w = r.number("width");
    const long h = r.number("height");
    check_decoded_dims(w, h);
    const int wi = static_cast<int>(w), hi = static_cast<int>(h);

    switch (type) {
        case '1':
            return decode_p1(r, wi, hi);
        case '2': {
            const long maxval = r.number("maxval");
            if (maxval > 255) {
                throw Error(Errc::unsupported_maxval,
                            "maxval " + std::to_string(maxval) + " exceeds 255");
            }
            if (maxval < 1) {
                throw Error(Errc::malformed_header, "maxval must be positive");
            }
            return decode_p2(r, wi, hi, maxval);
        }
        case '4':
            return decode_p4(r, wi, hi);
        default: {
            const long maxval = r.number("maxval");
            if (maxval > 255) {
                throw Error(Errc::unsupported_maxval,
                            "maxval " + std::to_string(maxval) + " exceeds 255");
            }
            if (maxval < 1) {
                throw Error(Errc::malformed_header, "maxval must be positive");
            }
            return decode_p5(r, wi, hi);
        }
    }
}

std::vector<std::uint8_t> encode_pnm(const GrayImage& img, PnmFormat format) {
    std::vector<std::uint8_t> out;
    switch (format) {
        case PnmFormat::pbm: {
            for (std::size_t p = 0; p < img.pixels.size(); ++p) {
                if (img.pixels[p] != 0 && img.pixels[p] != 255) {
                    throw Error(Errc::not_binary,
                                "pixel " + std::to_string(p) + " has value " +
                                    std::to_string(img.pixels[p]) +
                                    "; pbm requires a binary image");
                }
            }
            append(out, "P4\n" + dims_header(img));
            const std::size_t row_bytes =
                (static_cast<std::size_t>(img.width) + 7) / 8;
            for (int i = 0; i < img.height; ++i) {
                std::vector<std::uint8_t> row(row_bytes, 0);
                for (int j = 0; j < img.width; ++j) {
                    if (img.at(i, j) == 0) {  // black pixel -> ink bit
                        row[j / 8] |= static_cast<std::uint8_t>(0x80 >> (j % 8));
                    }
                }
                out.insert(out.end(), row.begin(), row.end());
            }
            return out;
        }
        case PnmFormat::pgm_ascii: {
            append(out, "P2\n" + dims_header(img) + "255\n");
            std::string line;
            for (std::size_t p = 0; p < img.pixels.size(); ++p) {
                const std::string sample = std::to_string(img.pixels[p]);
                // Netpbm asks writers to keep lines at 70 characters or less.
                if (!line.empty() && line.size() + 1 + sample.size() > 70) {
                    line += '\n';
                    append(out, line);
                    line.clear();
                }
                if (!line.empty()) line += ' ';
                line += sample;
            }
            line += '\n';
            append(out, line);
            return out;
        }
        case PnmFormat::pgm_raw: {
            append(out, "P5\n" + dims_header(img) + "255\n");
            out.insert(out.end(), img.pixels.begin(), img.pixels.end());
            return out;
        }
    }
    throw std::invalid_argument("unknown PNM format");
}

GrayImage read_pnm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return decode_pnm(bytes);
}

void write_pnm_file(const std::filesystem::path& path, const GrayImage& img,
                    PnmFormat format) {
    const auto bytes = encode_pnm(img, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

}  // namespace stegvcs
