#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fbar/errors.hpp"

namespace fbar {

/// Exact signed rational, normalized (den > 0, gcd(|num|, den) = 1).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t num, std::int64_t den);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// original/compressed as an exact ratio. Throws ZeroCompressedSize.
Rational compression_ratio(std::uint64_t original_bits, std::uint64_t compressed_bits);

/// 1 - compressed/original. Negative for expansion. Throws ZeroOriginalSize.
Rational space_saving(std::uint64_t original_bits, std::uint64_t compressed_bits);

std::array<std::uint64_t, 256> byte_frequencies(std::span<const std::uint8_t> data);

/// Order-0 entropy in bits per symbol of a frequency table. 0 for an empty table.
double entropy_from_frequencies(std::span<const std::uint64_t> frequencies);

/// Order-0 byte entropy in bits/character, in [0, 8]. Throws EmptyInput.
double shannon_entropy(std::span<const std::uint8_t> data);

/// Pair counts indexed by the 2-bit pair value: [00, 01, 10, 11].
std::array<std::uint64_t, 4> pair_histogram(std::span<const std::uint8_t> data);

/// Theoretical best bits/pair for an order-0 coder of the 4-symbol stream.
double order0_pair_entropy(const std::array<std::uint64_t, 4>& histogram);

enum class AccountingMode {
    honest, // collapsed stream plus the full serialized sideband
    paper,  // collapsed stream only
};

struct AnalysisReport {
    AccountingMode accounting = AccountingMode::honest;
    std::uint64_t original_bits = 0;
    std::uint64_t compressed_bits = 0;
    Rational ratio{0, 1};
    Rational saving{0, 1};
    bool expansion = false; // saving went negative
    double entropy_bits_per_char = 0.0;
    std::array<std::uint64_t, 4> pair_histogram{};
    double order0_pair_entropy = 0.0;
};

/// Honest and paper accounting of one input, plus the transform facts both
/// share. round_trip_ok is verified against both container modes.
struct AuditResult {
    AnalysisReport honest;
    AnalysisReport paper;
    std::uint64_t mixed_pairs = 0;
    std::uint64_t sideband_bits = 0;   // serialized sideband size, in bits
    std::uint64_t container_bytes = 0; // collapsed-mode container, header included
    std::uint32_t input_crc32 = 0;
    std::uint64_t input_bytes = 0;
    bool round_trip_ok = true;
};

AuditResult audit(std::span<const std::uint8_t> data);

/// One pass/fail line of the claims audit or of the internal consistency
/// checks.
struct ClaimCheck {
    std::string name;
    std::string detail;
    bool pass = false;
};

/// Verdicts on the headline claims: paper-accounting 2:1, honest 2~3:1
/// lossless ratio, the classic-corpus gzip rate of 2.9 bits/character, the
/// 2.3 bits/character entropy prediction, and the 1:1 round trip.
std::vector<ClaimCheck> check_claims(const AuditResult& result);

/// Internal consistency of the report itself: ratio/saving duality, the
/// sideband gap identity and the histogram total.
std::vector<ClaimCheck> consistency_checks(const AuditResult& result);

/// Per-file audit of a corpus member, for aggregation.
struct CorpusFileAudit {
    std::string path;
    AuditResult result;
    std::array<std::uint64_t, 256> frequencies{};
};

/// Sums sizes and histograms across files and recomputes the derived
/// quantities; entropy comes from the summed byte frequencies.
AuditResult aggregate_audits(const std::vector<CorpusFileAudit>& files);

/// Human-readable report block for one audit. Table lines never contain '='
/// so they cannot be mistaken for machine-format output. Pass an accounting
/// mode to restrict the size lines to one view.
std::string render_report(const std::string& title, const AuditResult& result,
                          std::optional<AccountingMode> only = std::nullopt);

/// Machine format: one key=value per line, keys prefixed with `prefix.`.
std::string render_machine(const std::string& prefix, const AuditResult& result,
                           std::optional<AccountingMode> only = std::nullopt);

std::string render_claims(const std::vector<ClaimCheck>& claims, const std::string& heading);

std::string render_claims_machine(const std::string& prefix, const std::vector<ClaimCheck>& claims);

} // namespace fbar
