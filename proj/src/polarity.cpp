#include "fbar/polarity.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

#include "fbar/layers.hpp"

namespace fbar {
namespace {

constexpr const char* kDown = "↓";
constexpr const char* kUp = "↑";

// Fixed rows: type number -> nibble pattern (bit 3 first).
constexpr std::array<std::uint8_t, 6> kRowPattern = {
    0b0110, // type 0, most characters
    0b0001, // type 1
    0b0100, // type 2
    0b0101, // type 3
    0b0111, // type 4
    0b0011, // type 5
};

std::string arrows_for(std::uint8_t nibble) {
    std::string s;
    for (int i = 3; i >= 0; --i) {
        s += ((nibble >> i) & 1) ? kUp : kDown;
    }
    return s;
}

std::optional<int> fixed_row(std::uint8_t nibble) {
    for (std::size_t t = 0; t < kRowPattern.size(); ++t) {
        if (kRowPattern[t] == nibble) {
            return static_cast<int>(t);
        }
    }
    return std::nullopt;
}

} // namespace

PolarityClass classify_nibble(std::uint8_t nibble) {
    nibble &= 0x0F;
    if (const auto row = fixed_row(nibble)) {
        return PolarityClass{*row, arrows_for(nibble), 1, 0.125};
    }
    return PolarityClass{6, "dual", 1, 0.125};
}

PolarityClass classify_char(std::uint8_t byte) {
    const auto hi = static_cast<std::uint8_t>(byte >> 4);
    const auto lo = static_cast<std::uint8_t>(byte & 0x0F);
    const auto hi_row = fixed_row(hi);
    const auto lo_row = fixed_row(lo);
    if (hi_row && lo_row && *hi_row == *lo_row) {
        return classify_nibble(hi);
    }
    int matched = 0;
    if (hi_row) {
        ++matched;
    }
    if (lo_row && lo_row != hi_row) {
        ++matched;
    }
    const double beta = std::clamp(matched / 8.0, 0.125, 0.75);
    return PolarityClass{6, "dual", 1, beta};
}

PolarityClass pair_direction(BitPair pair) {
    const PairSymbol s = classify(pair);
    if (s == PairSymbol::fall) {
        return PolarityClass{7, "↘", 1, 0.5};
    }
    if (s == PairSymbol::rise) {
        return PolarityClass{8, "↗", 1, 0.5};
    }
    throw NotMixedPair("pair_direction: pair is pure");
}

std::pair<std::uint8_t, std::uint8_t> channel_signature(std::uint8_t byte) {
    const std::array<std::uint8_t, 1> one{byte};
    const ChannelPair ch = layer23_channels(BitSeq::from_bytes(one));
    std::uint8_t a = 0, o = 0;
    for (int i = 0; i < 4; ++i) {
        a = static_cast<std::uint8_t>(a << 1 | ch.and_channel[static_cast<std::size_t>(i)]);
        o = static_cast<std::uint8_t>(o << 1 | ch.or_channel[static_cast<std::size_t>(i)]);
    }
    return {a, o};
}

std::vector<std::pair<std::uint8_t, std::uint8_t>> CollisionReport::colliding_pairs() const {
    std::vector<std::pair<std::uint8_t, std::uint8_t>> out;
    for (const auto& p : pairs) {
        if (p.collides) {
            out.emplace_back(p.first, p.second);
        }
    }
    return out;
}

CollisionReport find_collisions(std::span<const std::uint8_t> alphabet) {
    CollisionReport report;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> sig(alphabet.size());
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        sig[i] = channel_signature(alphabet[i]);
    }
    for (std::size_t i = 0; i + 1 < alphabet.size(); i += 2) {
        report.pairs.push_back(CollisionReport::AdjacentPair{
            alphabet[i], alphabet[i + 1], sig[i] == sig[i + 1] && alphabet[i] != alphabet[i + 1]});
    }
    std::map<std::pair<std::uint8_t, std::uint8_t>, std::vector<std::uint8_t>> groups;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        groups[sig[i]].push_back(alphabet[i]);
    }
    for (auto& [signature, members] : groups) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (members.size() >= 2) {
            report.classes.push_back(std::move(members));
        }
    }
    return report;
}

} // namespace fbar
