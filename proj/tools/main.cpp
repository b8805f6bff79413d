// Command-line front end for the banded (2,2) visual-cryptography
// steganography pipeline. Exit codes: 0 success, 1 domain error
// (CapacityExceeded, BandViolation, InconsistentPair, ...), 2 I/O or usage.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stegvcs/analysis.hpp"
#include "stegvcs/decode.hpp"
#include "stegvcs/embed.hpp"
#include "stegvcs/error.hpp"
#include "stegvcs/extract.hpp"
#include "stegvcs/image.hpp"
#include "stegvcs/payload.hpp"
#include "stegvcs/pnm.hpp"
#include "stegvcs/shares.hpp"

namespace {

using namespace stegvcs;

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::filesystem::path& path,
                 const std::vector<std::uint8_t>& bytes) {
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

bool looks_like_pnm(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 3 || bytes[0] != 'P') {
        return false;
    }
    const char t = static_cast<char>(bytes[1]);
    return (t == '1' || t == '2' || t == '4' || t == '5') &&
           (bytes[2] == ' ' || bytes[2] == '\t' || bytes[2] == '\n' ||
            bytes[2] == '\r' || bytes[2] == '#');
}

Payload load_secret(const std::filesystem::path& path,
                    const std::string& secret_type) {
    auto bytes = read_bytes(path);
    const bool as_image = secret_type == "img" ||
                          (secret_type.empty() && looks_like_pnm(bytes));
    if (as_image) {
        return image_payload(decode_pnm(bytes));
    }
    return message_payload(std::move(bytes));
}

struct EmbedArgs {
    std::string cover, secret, secret_type, out;
};
struct SharesArgs {
    std::string in, out1, out2;
    std::uint64_t seed = 0;
};
struct TwoShareArgs {
    std::string share1, share2, out;
};
struct ExtractArgs {
    std::string in, out_secret, out_cover;
};
struct AnalyzeArgs {
    std::string in, csv;
};
struct RoundtripArgs {
    std::string cover, secret, secret_type;
    std::uint64_t seed = 0;
};

int run_embed(const EmbedArgs& args) {
    const BinaryImage cover = validate_binary(read_pnm_file(args.cover));
    const Payload payload = load_secret(args.secret, args.secret_type);
    const StegoImage stego = embed(cover, payload);
    write_pnm_file(args.out, stego, PnmFormat::pgm_raw);
    std::cout << "embedded " << payload.body.size() << " payload bytes into "
              << stego.width << "x" << stego.height << " stego image " << args.out
              << "\n";
    return 0;
}

int run_shares(const SharesArgs& args) {
    const StegoImage stego{read_pnm_file(args.in)};
    const auto [share1, share2] = generate_shares(stego, args.seed);
    write_pnm_file(args.out1, share1, PnmFormat::pgm_raw);
    write_pnm_file(args.out2, share2, PnmFormat::pgm_raw);
    std::cout << "seed=" << args.seed << "\n"
              << "wrote " << share1.width << "x" << share1.height << " shares "
              << args.out1 << " and " << args.out2 << "\n";
    return 0;
}

int run_decode(const TwoShareArgs& args) {
    const Share share1{read_pnm_file(args.share1)};
    const Share share2{read_pnm_file(args.share2)};
    const StegoImage stego = decode_shares(share1, share2);
    write_pnm_file(args.out, stego, PnmFormat::pgm_raw);
    std::cout << "fused " << stego.width << "x" << stego.height
              << " stego image to " << args.out << "\n";
    return 0;
}

int run_extract(const ExtractArgs& args) {
    const GrayImage stego = read_pnm_file(args.in);
    const Payload payload = extract_payload(stego);
    if (payload.kind == PayloadKind::message) {
        write_bytes(args.out_secret, payload.body);
        std::cout << "extracted " << payload.body.size() << " message bytes to "
                  << args.out_secret << "\n";
    } else {
        const GrayImage secret(payload.width, payload.height, payload.body);
        write_pnm_file(args.out_secret, secret, PnmFormat::pgm_raw);
        std::cout << "extracted " << payload.width << "x" << payload.height
                  << " secret image to " << args.out_secret << "\n";
    }
    const BinaryImage cover = restore_cover(stego);
    write_pnm_file(args.out_cover, cover, PnmFormat::pbm);
    std::cout << "restored cover to " << args.out_cover << "\n";
    return 0;
}

int run_stack(const TwoShareArgs& args) {
    const Share share1{read_pnm_file(args.share1)};
    const Share share2{read_pnm_file(args.share2)};
    const GrayImage overlay = stack_or(share1, share2);
    write_pnm_file(args.out, overlay, PnmFormat::pgm_raw);
    std::cout << "wrote OR overlay to " << args.out << "\n";
    return 0;
}

int run_analyze(const AnalyzeArgs& args) {
    const GrayImage img = read_pnm_file(args.in);
    const HistogramReport hist = histogram(img);
    std::cout << "width=" << img.width << "\n"
              << "height=" << img.height << "\n"
              << render_histogram_kv(hist);
    if (hist.out_of_band == 0) {
        std::cout << render_band_gap_kv(band_gap_report(img));
    } else {
        std::cout << "band_gap=unavailable (out-of-band pixels present)\n";
    }
    std::cout << render_guess_probability_table();
    if (!args.csv.empty()) {
        const std::string csv = render_histogram_csv(hist);
        write_bytes(args.csv, std::vector<std::uint8_t>(csv.begin(), csv.end()));
    }
    return 0;
}

int run_roundtrip(const RoundtripArgs& args) {
    const BinaryImage cover = validate_binary(read_pnm_file(args.cover));
    const Payload payload = load_secret(args.secret, args.secret_type);

    const StegoImage stego = embed(cover, payload);
    const auto [share1, share2] = generate_shares(stego, args.seed);
    const StegoImage fused = decode_shares(share1, share2);
    const Payload extracted = extract_payload(fused);
    const BinaryImage restored = restore_cover(fused);

    const bool stego_ok = static_cast<const GrayImage&>(fused) == stego;
    const bool payload_ok = extracted == payload;
    const bool cover_ok =
        static_cast<const GrayImage&>(restored) == static_cast<const GrayImage&>(cover);
    if (stego_ok && payload_ok && cover_ok) {
        std::cout << "PASS seed=" << args.seed << " payload_bytes="
                  << payload.body.size() << " cover=" << cover.width << "x"
                  << cover.height << "\n";
        return 0;
    }
    std::cout << "FAIL stego=" << (stego_ok ? "ok" : "mismatch")
              << " payload=" << (payload_ok ? "ok" : "mismatch")
              << " cover=" << (cover_ok ? "ok" : "mismatch") << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hide a secret message/image in a binary cover, split the "
                 "result into two (2,2) visual-cryptography shares, and "
                 "reverse the pipeline exactly"};
    app.require_subcommand(1);

    EmbedArgs embed_args;
    auto* embed_cmd =
        app.add_subcommand("embed", "embed a secret into a binary cover image");
    embed_cmd->add_option("--cover", embed_args.cover, "cover image (PBM/PGM, strictly 0/255)")
        ->required();
    embed_cmd->add_option("--secret", embed_args.secret, "secret file")->required();
    embed_cmd->add_option("--secret-type", embed_args.secret_type,
                          "msg or img (default: sniff PNM magic)")
        ->check(CLI::IsMember({"msg", "img"}));
    embed_cmd->add_option("--out", embed_args.out, "output stego image (PGM)")
        ->required();

    SharesArgs shares_args;
    auto* shares_cmd =
        app.add_subcommand("shares", "split a stego image into two shares");
    shares_cmd->add_option("--in", shares_args.in, "stego image (PGM)")->required();
    shares_cmd->add_option("--seed", shares_args.seed, "pattern seed")->required();
    shares_cmd->add_option("--out1", shares_args.out1, "share 1 output")->required();
    shares_cmd->add_option("--out2", shares_args.out2, "share 2 output")->required();

    TwoShareArgs decode_args;
    auto* decode_cmd =
        app.add_subcommand("decode", "fuse two shares back into the stego image");
    decode_cmd->add_option("--share1", decode_args.share1, "share 1")->required();
    decode_cmd->add_option("--share2", decode_args.share2, "share 2")->required();
    decode_cmd->add_option("--out", decode_args.out, "output stego image")->required();

    ExtractArgs extract_args;
    auto* extract_cmd = app.add_subcommand(
        "extract", "recover the secret and the original cover from a stego image");
    extract_cmd->add_option("--in", extract_args.in, "stego image")->required();
    extract_cmd->add_option("--out-secret", extract_args.out_secret, "secret output")
        ->required();
    extract_cmd->add_option("--out-cover", extract_args.out_cover,
                            "restored cover output (PBM)")
        ->required();

    TwoShareArgs stack_args;
    auto* stack_cmd =
        app.add_subcommand("stack", "bitwise-OR overlay of two aligned shares");
    stack_cmd->add_option("--share1", stack_args.share1, "share 1")->required();
    stack_cmd->add_option("--share2", stack_args.share2, "share 2")->required();
    stack_cmd->add_option("--out", stack_args.out, "overlay output")->required();

    AnalyzeArgs analyze_args;
    auto* analyze_cmd =
        app.add_subcommand("analyze", "histogram, band-gap, and security report");
    analyze_cmd->add_option("--in", analyze_args.in, "image to analyze")->required();
    analyze_cmd->add_option("--csv", analyze_args.csv, "write per-bin histogram CSV");

    RoundtripArgs roundtrip_args;
    auto* roundtrip_cmd = app.add_subcommand(
        "roundtrip", "run the whole pipeline and verify exact recovery");
    roundtrip_cmd->add_option("--cover", roundtrip_args.cover, "cover image")
        ->required();
    roundtrip_cmd->add_option("--secret", roundtrip_args.secret, "secret file")
        ->required();
    roundtrip_cmd->add_option("--secret-type", roundtrip_args.secret_type,
                              "msg or img (default: sniff PNM magic)")
        ->check(CLI::IsMember({"msg", "img"}));
    roundtrip_cmd->add_option("--seed", roundtrip_args.seed, "pattern seed")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (embed_cmd->parsed()) return run_embed(embed_args);
        if (shares_cmd->parsed()) return run_shares(shares_args);
        if (decode_cmd->parsed()) return run_decode(decode_args);
        if (extract_cmd->parsed()) return run_extract(extract_args);
        if (stack_cmd->parsed()) return run_stack(stack_args);
        if (analyze_cmd->parsed()) return run_analyze(analyze_args);
        if (roundtrip_cmd->parsed()) return run_roundtrip(roundtrip_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
