// fbar: pairwise AND/OR lossless codec with a compression-claims audit.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid flags, 3 container
// integrity failure (bad magic, version, checksum).

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fbar/analysis.hpp"
#include "fbar/container.hpp"
#include "fbar/layers.hpp"
#include "fbar/polarity.hpp"

namespace {

constexpr const char* kVersion = "fbar 1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitFlags = 2;
constexpr int kExitIntegrity = 3;

std::optional<std::vector<std::uint8_t>> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "fbar: cannot open " << path << "\n";
        return std::nullopt;
    }
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        std::cerr << "fbar: read error on " << path << "\n";
        return std::nullopt;
    }
    return data;
}

bool write_file(const std::string& path, std::span<const std::uint8_t> data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "fbar: cannot create " << path << "\n";
        return false;
    }
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
        std::cerr << "fbar: write error on " << path << "\n";
        return false;
    }
    return true;
}

bool write_text(const std::string& path, const std::string& text) {
    return write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::string format_rational(const fbar::Rational& r) {
    std::ostringstream os;
    os << r.num << ":" << r.den;
    return os.str();
}

int cmd_compress(const std::string& input, const std::string& output, fbar::PayloadMode mode,
                 const std::string& export_path) {
    const auto data = read_file(input);
    if (!data) {
        return kExitIo;
    }
    const fbar::FbarContainer container = fbar::encode(*data, mode);
    if (!write_file(output, fbar::serialize(container))) {
        return kExitIo;
    }

    // honest accounting: collapsed bits plus the serialized sideband
    const fbar::CollapsedStream stream = fbar::layer4_collapse(fbar::layer1_encode(*data));
    const std::uint64_t original_bits = data->size() * 8;
    const std::uint64_t honest_bits = original_bits / 2 + stream.sideband.serialize().size() * 8;
    if (original_bits > 0 && honest_bits > 0) {
        const auto ratio = fbar::compression_ratio(original_bits, honest_bits);
        const auto saving = fbar::space_saving(original_bits, honest_bits);
        std::cout << "honest_ratio " << format_rational(ratio) << " (" << ratio.value() << ")\n";
        std::cout << "space_saving " << saving.value() << "\n";
    } else {
        std::cout << "honest_ratio n/a (empty input)\n";
        std::cout << "space_saving n/a\n";
    }
    std::cout << "container_bytes " << fbar::FbarContainer::kHeaderSize + container.payload.size() << "\n";

    if (!export_path.empty()) {
        if (!write_text(export_path, fbar::export_zero_byte_batch(stream.sideband))) {
            return kExitIo;
        }
    }
    return kExitOk;
}

int cmd_decompress(const std::string& input, const std::string& output) {
    const auto data = read_file(input);
    if (!data) {
        return kExitIo;
    }
    std::vector<std::uint8_t> original;
    try {
        original = fbar::decode_bytes(*data);
    } catch (const fbar::ChecksumMismatch& e) {
        std::cerr << "fbar: integrity failure: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const fbar::BadMagic& e) {
        std::cerr << "fbar: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const fbar::UnsupportedVersion& e) {
        std::cerr << "fbar: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const fbar::Error& e) {
        std::cerr << "fbar: container error: " << e.what() << "\n";
        return kExitIntegrity;
    }
    if (!write_file(output, original)) {
        return kExitIo;
    }
    return kExitOk;
}

std::string render_collision_table() {
    std::vector<std::uint8_t> alphabet;
    for (char c = 'A'; c <= 'Z'; ++c) {
        alphabet.push_back(static_cast<std::uint8_t>(c));
    }
    for (char c = 'a'; c <= 'z'; ++c) {
        alphabet.push_back(static_cast<std::uint8_t>(c));
    }
    const fbar::CollisionReport report = fbar::find_collisions(alphabet);
    std::ostringstream os;
    os << "== channel collisions over A-Z a-z ==\n";
    os << "  pair  orientation\n";
    int odd = 0;
    for (const auto& p : report.pairs) {
        os << "  " << static_cast<char>(p.first) << static_cast<char>(p.second) << "    "
           << (p.collides ? "odd (collides without sideband)" : "even") << "\n";
        odd += p.collides ? 2 : 0;
    }
    os << "  odd-orientation letters: " << odd << "\n";
    os << "  exhaustive equality classes:";
    for (const auto& cls : report.classes) {
        os << " {";
        for (const auto b : cls) {
            os << static_cast<char>(b);
        }
        os << "}";
    }
    os << "\n";
    return os.str();
}

struct AuditOptions {
    std::vector<std::string> paths;
    std::string accounting = "both";
    std::string output;
    bool collisions = false;
};

std::optional<fbar::AccountingMode> accounting_filter(const std::string& accounting) {
    if (accounting == "honest") {
        return fbar::AccountingMode::honest;
    }
    if (accounting == "paper") {
        return fbar::AccountingMode::paper;
    }
    return std::nullopt;
}

int cmd_audit(const AuditOptions& options) {
    const auto filter = accounting_filter(options.accounting);
    std::ostringstream report;
    report << kVersion << " audit, accounting " << options.accounting << "\n\n";

    if (options.collisions && options.paths.empty()) {
        report << render_collision_table();
        if (!options.output.empty()) {
            return write_text(options.output, report.str()) ? kExitOk : kExitIo;
        }
        std::cout << report.str();
        return kExitOk;
    }

    std::vector<std::vector<std::uint8_t>> contents(options.paths.size());
    for (std::size_t i = 0; i < options.paths.size(); ++i) {
        auto data = read_file(options.paths[i]);
        if (!data) {
            return kExitIo;
        }
        contents[i] = std::move(*data);
    }

    std::vector<fbar::CorpusFileAudit> files(options.paths.size());
    const char* no_parallel = std::getenv("FBAR_NO_PARALLEL");
    const bool parallel = options.paths.size() > 1 && (no_parallel == nullptr || std::string(no_parallel) != "1");
    if (parallel) {
        std::vector<std::future<fbar::CorpusFileAudit>> futures;
        futures.reserve(options.paths.size());
        for (std::size_t i = 0; i < options.paths.size(); ++i) {
            futures.push_back(std::async(std::launch::async, [&, i] {
                return fbar::CorpusFileAudit{options.paths[i], fbar::audit(contents[i]),
                                             fbar::byte_frequencies(contents[i])};
            }));
        }
        for (std::size_t i = 0; i < futures.size(); ++i) {
            files[i] = futures[i].get();
        }
    } else {
        for (std::size_t i = 0; i < options.paths.size(); ++i) {
            files[i] = fbar::CorpusFileAudit{options.paths[i], fbar::audit(contents[i]),
                                             fbar::byte_frequencies(contents[i])};
        }
    }

    for (const auto& f : files) {
        report << fbar::render_report(f.path, f.result, filter) << "\n";
    }
    const fbar::AuditResult aggregate = fbar::aggregate_audits(files);
    report << fbar::render_report("aggregate (" + std::to_string(files.size()) + " files)", aggregate, filter)
           << "\n";
    report << fbar::render_claims(fbar::check_claims(aggregate), "claims audit") << "\n";
    report << fbar::render_claims(fbar::consistency_checks(aggregate), "internal consistency") << "\n";
    if (options.collisions) {
        report << render_collision_table() << "\n";
    }
    report << fbar::render_machine("fbar.aggregate", aggregate, filter);
    report << fbar::render_claims_machine("fbar.claim", fbar::check_claims(aggregate));
    report << fbar::render_claims_machine("fbar.consistency", fbar::consistency_checks(aggregate));

    if (!options.output.empty()) {
        return write_text(options.output, report.str()) ? kExitOk : kExitIo;
    }
    std::cout << report.str();
    return kExitOk;
}

int cmd_export_batch(const std::string& input, const std::string& output) {
    const auto bytes = read_file(input);
    if (!bytes) {
        return kExitIo;
    }
    std::string listing;
    try {
        const fbar::FbarContainer container = fbar::parse(*bytes);
        const std::vector<std::uint8_t> data = fbar::decode(container);
        const fbar::CollapsedStream stream = fbar::layer4_collapse(fbar::layer1_encode(data));
        listing = fbar::export_zero_byte_batch(stream.sideband);
    } catch (const fbar::Error& e) {
        std::cerr << "fbar: " << e.what() << "\n";
        return kExitIntegrity;
    }
    if (output.empty()) {
        std::cout << listing;
        return kExitOk;
    }
    return write_text(output, listing) ? kExitOk : kExitIo;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"FBAR pairwise AND/OR lossless codec and claims audit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string input, output, export_path, mode = "collapsed";
    AuditOptions audit_options;

    CLI::App* compress = app.add_subcommand("compress", "Compress a file into an .fbar container");
    compress->add_option("input", input, "file to compress")->required();
    compress->add_option("--output", output, "container path")->required();
    compress->add_option("--mode", mode, "payload layout")
        ->check(CLI::IsMember({"channels", "collapsed"}));
    compress->add_option("--export-batch", export_path, "also write the zero-byte batch listing");

    CLI::App* decompress = app.add_subcommand("decompress", "Restore the original file");
    decompress->add_option("input", input, ".fbar container")->required();
    decompress->add_option("--output", output, "restored file path")->required();

    CLI::App* audit = app.add_subcommand("audit", "Measure compression behavior over files");
    audit->add_option("paths", audit_options.paths, "corpus files");
    audit->add_option("--accounting", audit_options.accounting, "size accounting view")
        ->check(CLI::IsMember({"honest", "paper", "both"}));
    audit->add_option("--output", audit_options.output, "write the report here instead of stdout");
    audit->add_flag("--collisions", audit_options.collisions, "include the alphabet collision table");

    CLI::App* export_batch = app.add_subcommand("export-batch", "Write a container's sideband as a batch listing");
    export_batch->add_option("input", input, ".fbar container")->required();
    export_batch->add_option("--output", output, "listing path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitFlags;
    }

    if (app.got_subcommand(compress)) {
        return cmd_compress(input, output,
                            mode == "channels" ? fbar::PayloadMode::channels : fbar::PayloadMode::collapsed,
                            export_path);
    }
    if (app.got_subcommand(decompress)) {
        return cmd_decompress(input, output);
    }
    if (app.got_subcommand(audit)) {
        if (audit_options.paths.empty() && !audit_options.collisions) {
            std::cerr << "fbar: audit needs corpus paths or --collisions\n";
            return kExitFlags;
        }
        return cmd_audit(audit_options);
    }
    if (app.got_subcommand(export_batch)) {
        return cmd_export_batch(input, output);
    }
    return kExitFlags;
}
