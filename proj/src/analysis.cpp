#include "fbar/analysis.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "fbar/container.hpp"
#include "fbar/layers.hpp"

namespace fbar {

Rational Rational::of(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw Error("Rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

Rational compression_ratio(std::uint64_t original_bits, std::uint64_t compressed_bits) {
    if (compressed_bits == 0) {
        throw ZeroCompressedSize("compression_ratio: compressed size is zero");
    }
    return Rational::of(static_cast<std::int64_t>(original_bits), static_cast<std::int64_t>(compressed_bits));
}

Rational space_saving(std::uint64_t original_bits, std::uint64_t compressed_bits) {
    if (original_bits == 0) {
        throw ZeroOriginalSize("space_saving: original size is zero");
    }
    return Rational::of(static_cast<std::int64_t>(original_bits) - static_cast<std::int64_t>(compressed_bits),
                        static_cast<std::int64_t>(original_bits));
}

std::array<std::uint64_t, 256> byte_frequencies(std::span<const std::uint8_t> data) {
    std::array<std::uint64_t, 256> freq{};
    for (const std::uint8_t b : data) {
        ++freq[b];
    }
    return freq;
}

double entropy_from_frequencies(std::span<const std::uint64_t> frequencies) {
    std::uint64_t total = 0;
    for (const std::uint64_t f : frequencies) {
        total += f;
    }
    if (total == 0) {
        return 0.0;
    }
    double h = 0.0;
    for (const std::uint64_t f : frequencies) {
        if (f == 0) {
            continue;
        }
        const double p = static_cast<double>(f) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h;
}

double shannon_entropy(std::span<const std::uint8_t> data) {
    if (data.empty()) {
        throw EmptyInput("shannon_entropy: empty input");
    }
    const auto freq = byte_frequencies(data);
    return entropy_from_frequencies(freq);
}

std::array<std::uint64_t, 4> pair_histogram(std::span<const std::uint8_t> data) {
    std::array<std::uint64_t, 4> hist{};
    for (const std::uint8_t b : data) {
        ++hist[(b >> 6) & 3];
        ++hist[(b >> 4) & 3];
        ++hist[(b >> 2) & 3];
        ++hist[b & 3];
    }
    return hist;
}

double order0_pair_entropy(const std::array<std::uint64_t, 4>& histogram) {
    return entropy_from_frequencies(histogram);
}

namespace {

void fill_sizes(AnalysisReport& report, std::uint64_t original_bits, std::uint64_t compressed_bits) {
    report.original_bits = original_bits;
    report.compressed_bits = compressed_bits;
    if (original_bits > 0 && compressed_bits > 0) {
        report.ratio = compression_ratio(original_bits, compressed_bits);
        report.saving = space_saving(original_bits, compressed_bits);
        report.expansion = report.saving.num < 0;
    }
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::string format_ratio(const Rational& r) {
    std::ostringstream os;
    os << r.num << ":" << r.den << " (" << format_double(r.value()) << ")";
    return os.str();
}

} // namespace

AuditResult audit(std::span<const std::uint8_t> data) {
    AuditResult out;
    out.input_bytes = data.size();
    out.input_crc32 = crc32_ieee(data);
    out.honest.accounting = AccountingMode::honest;
    out.paper.accounting = AccountingMode::paper;
    if (data.empty()) {
        return out;
    }

    const std::uint64_t original_bits = data.size() * 8;
    const BitSeq bits = layer1_encode(data);
    const CollapsedStream stream = layer4_collapse(bits);
    out.mixed_pairs = stream.sideband.size();
    out.sideband_bits = stream.sideband.serialize().size() * 8;

    const auto collapsed_container = encode(data, PayloadMode::collapsed);
    out.container_bytes = serialize(collapsed_container).size();

    const std::uint64_t collapsed_bits = original_bits / 2;
    fill_sizes(out.paper, original_bits, collapsed_bits);
    fill_sizes(out.honest, original_bits, collapsed_bits + out.sideband_bits);

    const auto hist = pair_histogram(data);
    const double pair_entropy = order0_pair_entropy(hist);
    const double char_entropy = shannon_entropy(data);
    for (AnalysisReport* r : {&out.honest, &out.paper}) {
        r->pair_histogram = hist;
        r->order0_pair_entropy = pair_entropy;
        r->entropy_bits_per_char = char_entropy;
    }

    out.round_trip_ok = decode(collapsed_container) == std::vector<std::uint8_t>(data.begin(), data.end()) &&
                        decode(encode(data, PayloadMode::channels)) ==
                            std::vector<std::uint8_t>(data.begin(), data.end());
    return out;
}

std::vector<ClaimCheck> check_claims(const AuditResult& r) {
    std::vector<ClaimCheck> claims;
    const bool nonempty = r.honest.original_bits > 0;

    {
        const bool pass = nonempty && r.paper.ratio == Rational{2, 1};
        claims.push_back({"paper_accounting_2to1",
                          "collapsed-only accounting halves the input exactly; measured " +
                              format_ratio(r.paper.ratio),
                          pass});
    }
    {
        const double v = r.honest.ratio.value();
        const bool pass = nonempty && v >= 2.0 && v <= 3.0;
        claims.push_back({"lossless_ratio_2to3",
                          "claimed honest compression of 2:1 up to ~3:1; measured " +
                              format_ratio(r.honest.ratio),
                          pass});
    }
    {
        const double bits_per_char =
            nonempty ? 8.0 * static_cast<double>(r.honest.compressed_bits) /
                           static_cast<double>(r.honest.original_bits)
                     : 0.0;
        const bool pass = nonempty && bits_per_char <= 2.9;
        claims.push_back({"rate_beats_gzip_2p9",
                          "gzip reference rate 2.9 bits/character (ratio 36.3% on the classic corpus); "
                          "measured honest rate " +
                              format_double(bits_per_char) + " bits/character",
                          pass});
    }
    {
        const bool pass = nonempty && r.honest.entropy_bits_per_char <= 2.3;
        claims.push_back({"entropy_prediction_2p3",
                          "2.3 bits/character predicted for English; measured order-0 entropy " +
                              format_double(r.honest.entropy_bits_per_char) + " bits/character",
                          pass});
    }
    {
        claims.push_back({"round_trip_1to1",
                          "decompression must reproduce the input at a 1:1 ratio in both modes",
                          nonempty && r.round_trip_ok});
    }
    return claims;
}

std::vector<ClaimCheck> consistency_checks(const AuditResult& r) {
    std::vector<ClaimCheck> checks;
    for (const AnalysisReport* rep : {&r.honest, &r.paper}) {
        const char* tag = rep->accounting == AccountingMode::honest ? "honest" : "paper";
        bool duality = true;
        if (rep->original_bits > 0 && rep->compressed_bits > 0) {
            // ratio == 1 / (1 - saving), exactly
            const Rational one_minus = Rational::of(rep->saving.den - rep->saving.num, rep->saving.den);
            duality = Rational::of(one_minus.den, one_minus.num) == rep->ratio;
        }
        checks.push_back({std::string("duality_") + tag,
                          "ratio equals 1/(1 - space saving) as exact rationals", duality});
        std::uint64_t total = 0;
        for (const auto c : rep->pair_histogram) {
            total += c;
        }
        checks.push_back({std::string("histogram_total_") + tag,
                          "pair histogram totals original_bits/2",
                          total == rep->original_bits / 2});
    }
    checks.push_back({"sideband_gap",
                      "honest minus paper compressed size equals the serialized sideband exactly",
                      r.honest.compressed_bits - r.paper.compressed_bits == r.sideband_bits});
    return checks;
}

AuditResult aggregate_audits(const std::vector<CorpusFileAudit>& files) {
    AuditResult agg;
    agg.honest.accounting = AccountingMode::honest;
    agg.paper.accounting = AccountingMode::paper;
    std::array<std::uint64_t, 256> freq{};
    std::uint64_t original_bits = 0, honest_bits = 0, paper_bits = 0;
    std::array<std::uint64_t, 4> hist{};
    std::vector<std::uint8_t> fingerprint;
    for (const auto& f : files) {
        original_bits += f.result.honest.original_bits;
        honest_bits += f.result.honest.compressed_bits;
        paper_bits += f.result.paper.compressed_bits;
        agg.mixed_pairs += f.result.mixed_pairs;
        agg.sideband_bits += f.result.sideband_bits;
        agg.container_bytes += f.result.container_bytes;
        agg.input_bytes += f.result.input_bytes;
        agg.round_trip_ok = agg.round_trip_ok && f.result.round_trip_ok;
        for (int i = 0; i < 4; ++i) {
            hist[i] += f.result.honest.pair_histogram[i];
        }
        for (int i = 0; i < 256; ++i) {
            freq[i] += f.frequencies[i];
        }
        for (int i = 0; i < 4; ++i) {
            fingerprint.push_back(static_cast<std::uint8_t>(f.result.input_crc32 >> (8 * i)));
        }
    }
    fill_sizes(agg.honest, original_bits, honest_bits);
    fill_sizes(agg.paper, original_bits, paper_bits);
    const double char_entropy = entropy_from_frequencies(freq);
    const double pair_entropy = order0_pair_entropy(hist);
    for (AnalysisReport* r : {&agg.honest, &agg.paper}) {
        r->pair_histogram = hist;
        r->order0_pair_entropy = pair_entropy;
        r->entropy_bits_per_char = char_entropy;
    }
    agg.input_crc32 = crc32_ieee(fingerprint);
    return agg;
}

std::string render_report(const std::string& title, const AuditResult& r,
                          std::optional<AccountingMode> only) {
    std::ostringstream os;
    os << "== " << title << " ==\n";
    os << "  input              " << r.input_bytes << " bytes, crc32 " << std::hex << r.input_crc32
       << std::dec << "\n";
    for (const AnalysisReport* rep : {&r.honest, &r.paper}) {
        if (only && rep->accounting != *only) {
            continue;
        }
        const char* tag = rep->accounting == AccountingMode::honest ? "honest" : "paper ";
        os << "  " << tag << " accounting  " << rep->original_bits << " -> " << rep->compressed_bits
           << " bits, ratio " << format_ratio(rep->ratio) << ", saving " << format_double(rep->saving.value());
        if (rep->expansion) {
            os << " (expansion)";
        }
        os << "\n";
    }
    os << "  mixed pairs        " << r.mixed_pairs << " (sideband " << r.sideband_bits << " bits serialized)\n";
    os << "  container          " << r.container_bytes << " bytes (collapsed mode, header included)\n";
    const auto& h = r.honest.pair_histogram;
    os << "  pair histogram     00:" << h[0] << " 01:" << h[1] << " 10:" << h[2] << " 11:" << h[3] << "\n";
    os << "  pair entropy       " << format_double(r.honest.order0_pair_entropy) << " bits/pair (order-0)\n";
    os << "  byte entropy       " << format_double(r.honest.entropy_bits_per_char) << " bits/character\n";
    os << "  round trip         " << (r.round_trip_ok ? "ok" : "FAILED") << "\n";
    return os.str();
}

std::string render_machine(const std::string& prefix, const AuditResult& r,
                           std::optional<AccountingMode> only) {
    std::ostringstream os;
    const auto key = [&prefix](const char* k) { return prefix.empty() ? std::string(k) : prefix + "." + k; };
    os << key("input_bytes") << "=" << r.input_bytes << "\n";
    os << key("input_crc32") << "=" << std::hex << r.input_crc32 << std::dec << "\n";
    os << key("original_bits") << "=" << r.honest.original_bits << "\n";
    if (!only || *only == AccountingMode::honest) {
        os << key("honest.compressed_bits") << "=" << r.honest.compressed_bits << "\n";
        os << key("honest.ratio") << "=" << format_double(r.honest.ratio.value()) << "\n";
        os << key("honest.space_saving") << "=" << format_double(r.honest.saving.value()) << "\n";
    }
    if (!only || *only == AccountingMode::paper) {
        os << key("paper.compressed_bits") << "=" << r.paper.compressed_bits << "\n";
        os << key("paper.ratio") << "=" << format_double(r.paper.ratio.value()) << "\n";
        os << key("paper.space_saving") << "=" << format_double(r.paper.saving.value()) << "\n";
    }
    os << key("mixed_pairs") << "=" << r.mixed_pairs << "\n";
    os << key("sideband_bits") << "=" << r.sideband_bits << "\n";
    os << key("container_bytes") << "=" << r.container_bytes << "\n";
    const auto& h = r.honest.pair_histogram;
    os << key("pairs.00") << "=" << h[0] << "\n";
    os << key("pairs.01") << "=" << h[1] << "\n";
    os << key("pairs.10") << "=" << h[2] << "\n";
    os << key("pairs.11") << "=" << h[3] << "\n";
    os << key("pair_entropy_bits") << "=" << format_double(r.honest.order0_pair_entropy) << "\n";
    os << key("byte_entropy_bits") << "=" << format_double(r.honest.entropy_bits_per_char) << "\n";
    os << key("round_trip_ok") << "=" << (r.round_trip_ok ? 1 : 0) << "\n";
    return os.str();
}

std::string render_claims(const std::vector<ClaimCheck>& claims, const std::string& heading) {
    std::ostringstream os;
    os << "== " << heading << " ==\n";
    for (const auto& c : claims) {
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
    }
    return os.str();
}

std::string render_claims_machine(const std::string& prefix, const std::vector<ClaimCheck>& claims) {
    std::ostringstream os;
    for (const auto& c : claims) {
        os << prefix << "." << c.name << "=" << (c.pass ? "pass" : "fail") << "\n";
    }
    return os.str();
}

} // namespace fbar
