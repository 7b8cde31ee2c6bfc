// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria cover losslessness, the golden channel vectors, the
// collision oracle, the ratio arithmetic, pure-pair bounds, the claims
// audit, entropy sanity and container corruption detection.

#include <array>
#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fbar/analysis.hpp"
#include "fbar/container.hpp"
#include "fbar/layers.hpp"
#include "fbar/polarity.hpp"

using namespace fbar;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
    if (!detail.empty()) {
        std::cout << " [" << detail << "]";
    }
    std::cout << std::endl;
    if (!pass) {
        ++failures;
    }
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::uint8_t> random_bytes(std::mt19937& rng, std::size_t n) {
    std::vector<std::uint8_t> out(n);
    std::uniform_int_distribution<int> d(0, 255);
    for (auto& b : out) {
        b = static_cast<std::uint8_t>(d(rng));
    }
    return out;
}

// --- criterion 1: losslessness ---------------------------------------------

void criterion_losslessness() {
    const auto start = Clock::now();
    std::mt19937 rng(0xFBA12001);
    std::uint64_t strings = 0, failures_here = 0, bytes_total = 0;

    const auto roundtrip = [&](const std::vector<std::uint8_t>& data) {
        ++strings;
        bytes_total += data.size();
        for (const auto mode : {PayloadMode::channels, PayloadMode::collapsed}) {
            if (decode_bytes(serialize(encode(data, mode))) != data) {
                ++failures_here;
            }
        }
    };

    for (int b = 0; b < 256; ++b) {
        roundtrip({static_cast<std::uint8_t>(b)});
    }

    const std::size_t forced[] = {0, 1, 2, 3, 7, 8, 65535, 65536};
    for (const std::size_t n : forced) {
        roundtrip(random_bytes(rng, n));
    }

    std::uniform_int_distribution<std::size_t> small(0, 256);
    std::uniform_int_distribution<std::size_t> medium(0, 4096);
    std::uniform_int_distribution<std::size_t> large(4096, 16384);
    std::uniform_int_distribution<std::size_t> huge(16384, 65536);
    for (int i = 0; i < 10000; ++i) {
        std::size_t n;
        if (i < 5000) {
            n = small(rng);
        } else if (i < 9000) {
            n = medium(rng);
        } else if (i < 9950) {
            n = large(rng);
        } else {
            n = huge(rng);
        }
        roundtrip(random_bytes(rng, n));
    }

    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << strings << " strings, " << bytes_total / 1024 << " KiB, both modes, " << elapsed << "s";
    report(1, "losslessness: decode(encode(B)) = B", failures_here == 0 && elapsed < 60.0, detail.str());
}

// --- criterion 2: golden layer-3 vectors ------------------------------------

void criterion_golden_vectors() {
    const std::string text = "Philip Baback";
    const BitSeq bits = layer1_encode(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
    const ChannelPair ch = layer23_channels(bits);
    const BitSeq golden_and =
        BitSeq::from_string("1000 1000 0000 0000 0000 0000 0000 0010 0000 0100 0000 0000 0000");
    const BitSeq golden_or =
        BitSeq::from_string("1111 1011 1011 1011 1011 1001 0010 0011 1111 0111 1111 0111 0011");
    const bool pass = ch.and_channel == golden_and && ch.or_channel == golden_or &&
                      ch.and_channel.size() == 52 && ch.or_channel.size() == 52;
    report(2, "golden channel vectors for \"Philip Baback\"", pass,
           pass ? "13 nibbles per channel, exact" : "mismatch");
}

// --- criterion 3: collision oracle -------------------------------------------

bool swap_equivalent(std::uint8_t x, std::uint8_t y) {
    for (int i = 0; i < 4; ++i) {
        const int px = (x >> (6 - 2 * i)) & 3;
        const int py = (y >> (6 - 2 * i)) & 3;
        const bool mx = px == 1 || px == 2;
        const bool my = py == 1 || py == 2;
        if (mx != my || (!mx && px != py)) {
            return false;
        }
    }
    return true;
}

void criterion_collisions() {
    const auto start = Clock::now();
    std::vector<std::uint8_t> alphabet;
    for (char c = 'A'; c <= 'Z'; ++c) {
        alphabet.push_back(static_cast<std::uint8_t>(c));
    }
    for (char c = 'a'; c <= 'z'; ++c) {
        alphabet.push_back(static_cast<std::uint8_t>(c));
    }
    const CollisionReport r = find_collisions(alphabet);
    const std::vector<std::pair<std::uint8_t, std::uint8_t>> expected = {
        {'A', 'B'}, {'E', 'F'}, {'I', 'J'}, {'M', 'N'}, {'Q', 'R'}, {'U', 'V'}, {'Y', 'Z'},
        {'a', 'b'}, {'e', 'f'}, {'i', 'j'}, {'m', 'n'}, {'q', 'r'}, {'u', 'v'}, {'y', 'z'},
    };
    const bool pairs_ok = r.colliding_pairs() == expected;

    bool criterion_ok = true;
    std::array<std::pair<std::uint8_t, std::uint8_t>, 256> sig;
    for (int b = 0; b < 256; ++b) {
        sig[b] = channel_signature(static_cast<std::uint8_t>(b));
    }
    for (int x = 0; x < 256 && criterion_ok; ++x) {
        for (int y = 0; y < 256; ++y) {
            if ((sig[x] == sig[y]) != swap_equivalent(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y))) {
                criterion_ok = false;
                break;
            }
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << "7+7 letter pairs, 256x256 swap criterion, " << elapsed << "s";
    report(3, "collision oracle", pairs_ok && criterion_ok && elapsed < 10.0, detail.str());
}

// --- criterion 4: space-saving arithmetic ------------------------------------

void criterion_ratio_arithmetic() {
    const Rational saving = space_saving(536870912, 8388608);
    const bool big_ok = saving == Rational{63, 64} && saving.value() == 0.984375;

    const std::array<std::uint8_t, 1> p{'P'};
    const AuditResult r = audit(p);
    const bool p_ok = r.paper.original_bits == 8 && r.paper.compressed_bits == 4 &&
                      r.paper.ratio == Rational{2, 1} && compression_ratio(8, 4) == Rational{2, 1};

    report(4, "space-saving and ratio arithmetic", big_ok && p_ok,
           "64MB/1MB saving 0.984375 exact; 'P' 8 -> 4 bits at 2:1");
}

// --- criterion 5: paper accounting bound on pure pairs -----------------------

void criterion_pure_pair_bound() {
    bool ok = true;
    std::ostringstream detail;
    for (const std::uint8_t fill : {std::uint8_t{0x00}, std::uint8_t{0xFF}, std::uint8_t{0x33}}) {
        const std::vector<std::uint8_t> data(4096, fill);
        const AuditResult r = audit(data);
        if (!(r.paper.ratio == Rational{2, 1})) {
            ok = false;
        }
        // honest view: the whole container must sit within the fixed header
        // overhead (< 30 bytes) of half the input
        const auto container_bytes = serialize(encode(data, PayloadMode::collapsed)).size();
        const auto half = data.size() / 2;
        const auto overhead = container_bytes > half ? container_bytes - half : half - container_bytes;
        if (overhead >= 30) {
            ok = false;
        }
        detail << "0x" << std::hex << static_cast<int>(fill) << std::dec << ": container " << container_bytes
               << "B vs half " << half << "B; ";
    }
    report(5, "pure-pair inputs hit 2:1 exactly (paper) and within header overhead (honest)", ok, detail.str());
}

// --- criterion 6: claims audit over an English corpus ------------------------

std::vector<std::uint8_t> synthetic_english_corpus(std::size_t min_bytes) {
    // Deterministic English-like text from a fixed vocabulary; letter and
    // word-length statistics are close enough to prose for the audit.
    static const char* kWords[] = {
        "the", "of", "and", "a", "to", "in", "is", "you", "that", "it", "he", "was", "for", "on",
        "are", "as", "with", "his", "they", "at", "be", "this", "have", "from", "or", "one", "had",
        "by", "word", "but", "not", "what", "all", "were", "we", "when", "your", "can", "said",
        "there", "use", "an", "each", "which", "she", "do", "how", "their", "if", "will", "up",
        "other", "about", "out", "many", "then", "them", "these", "so", "some", "her", "would",
        "make", "like", "him", "into", "time", "has", "look", "two", "more", "write", "go", "see",
        "number", "no", "way", "could", "people", "my", "than", "first", "water", "been", "call",
        "who", "oil", "its", "now", "find", "long", "down", "day", "did", "get", "come", "made",
        "may", "part", "over", "new", "sound", "take", "only", "little", "work", "know", "place",
        "year", "live", "me", "back", "give", "most", "very", "after", "thing", "our", "just",
        "name", "good", "sentence", "man", "think", "say", "great", "where", "help", "through",
        "much", "before", "line", "right", "too", "mean", "old", "any", "same", "tell", "boy",
        "follow", "came", "want", "show", "also", "around", "form", "three", "small", "set", "put",
        "end", "does", "another", "well", "large", "must", "big", "even", "such", "because", "turn",
        "here", "why", "ask", "went", "men", "read", "need", "land", "different", "home", "us",
    };
    constexpr std::size_t kWordCount = sizeof(kWords) / sizeof(kWords[0]);

    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<std::size_t> word(0, kWordCount - 1);
    std::uniform_int_distribution<int> sentence_len(5, 14);

    std::string text;
    text.reserve(min_bytes + 128);
    while (text.size() < min_bytes) {
        const int n = sentence_len(rng);
        for (int i = 0; i < n; ++i) {
            std::string w = kWords[word(rng)];
            if (i == 0) {
                w[0] = static_cast<char>(w[0] - 'a' + 'A');
            }
            text += w;
            text += (i + 1 == n) ? "." : " ";
        }
        text += (text.size() % 512 < 64) ? "\n" : " ";
    }
    return {text.begin(), text.end()};
}

void criterion_claims_audit() {
    const auto corpus = synthetic_english_corpus(1 << 20);
    const AuditResult r = audit(corpus);
    const auto claims = check_claims(r);
    const auto consistency = consistency_checks(r);

    bool ok = corpus.size() >= (1 << 20);
    ok = ok && r.honest.ratio.num > 0; // honest ratio reported
    std::uint64_t hist_total = 0;
    for (const auto c : r.honest.pair_histogram) {
        hist_total += c;
    }
    ok = ok && hist_total == r.honest.original_bits / 2;
    ok = ok && r.honest.order0_pair_entropy > 0.0;
    ok = ok && claims.size() >= 5; // a verdict per headline claim
    for (const auto& c : consistency) {
        ok = ok && c.pass; // internal consistency must hold
    }
    // the claim verdicts themselves may be pass or fail; they must be present
    std::cout << render_claims(claims, "claims audit over synthetic English corpus");
    std::cout << render_claims(consistency, "internal consistency");

    std::ostringstream detail;
    detail << corpus.size() / 1024 << " KiB corpus, honest ratio " << r.honest.ratio.value()
           << ", pair entropy " << r.honest.order0_pair_entropy;
    report(6, "claims audit runs and is internally consistent", ok, detail.str());
}

// --- criterion 7: entropy sanity ---------------------------------------------

void criterion_entropy() {
    const std::vector<std::uint8_t> constant(4096, 0x42);
    const bool zero_ok = shannon_entropy(constant) == 0.0;

    std::vector<std::uint8_t> uniform(256 * 16);
    for (std::size_t i = 0; i < uniform.size(); ++i) {
        uniform[i] = static_cast<std::uint8_t>(i % 256);
    }
    const bool max_ok = std::abs(shannon_entropy(uniform) - 8.0) <= 1e-9;

    const std::vector<std::uint8_t> abab{'a', 'b', 'a', 'b'};
    const bool bit_ok = std::abs(shannon_entropy(abab) - 1.0) <= 1e-9;

    report(7, "entropy sanity (0.0 constant, 8.0 uniform, 1.0 \"abab\")", zero_ok && max_ok && bit_ok, "");
}

// --- criterion 8: container corruption detection -----------------------------

void criterion_corruption() {
    std::mt19937 rng(0xFBA12008);
    std::uniform_int_distribution<std::size_t> len(32, 512);
    std::uniform_int_distribution<int> bit(0, 7);
    int detected = 0, trials = 0, wrong_error = 0, silent = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto data = random_bytes(rng, len(rng));
        const auto mode = i % 2 == 0 ? PayloadMode::channels : PayloadMode::collapsed;
        auto bytes = serialize(encode(data, mode));
        std::uniform_int_distribution<std::size_t> pos(FbarContainer::kHeaderSize, bytes.size() - 1);
        bytes[pos(rng)] ^= static_cast<std::uint8_t>(1 << bit(rng));
        ++trials;
        try {
            (void)decode_bytes(bytes);
            ++silent;
        } catch (const ChecksumMismatch&) {
            ++detected;
        } catch (const Error&) {
            ++wrong_error;
        }
    }
    std::ostringstream detail;
    detail << detected << "/" << trials << " ChecksumMismatch, " << wrong_error << " other errors, "
           << silent << " undetected";
    report(8, "single-bit payload corruption always detected", detected == trials, detail.str());
}

} // namespace

int main() {
    criterion_losslessness();
    criterion_golden_vectors();
    criterion_collisions();
    criterion_ratio_arithmetic();
    criterion_pure_pair_bound();
    criterion_claims_audit();
    criterion_entropy();
    criterion_corruption();
    if (failures == 0) {
        std::cout << "all acceptance criteria passed" << std::endl;
        return 0;
    }
    std::cout << failures << " acceptance criteria failed" << std::endl;
    return 1;
}
