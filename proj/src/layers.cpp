#include "fbar/layers.hpp"

#include <array>

namespace fbar {
namespace {

constexpr std::uint8_t rev4(std::uint8_t v) {
    return static_cast<std::uint8_t>(((v & 1) << 3) | ((v & 2) << 1) | ((v & 4) >> 1) | ((v & 8) >> 3));
}

// Per-byte pair tables. Pair i of a byte is bits (7-2i, 6-2i); nibble bit
// order puts pair 0 in the nibble's MSB.
struct PairTables {
    std::array<std::uint8_t, 256> pair_and{};
    std::array<std::uint8_t, 256> pair_or{};
    std::array<std::uint8_t, 256> first_bits{};
    std::array<std::uint8_t, 256> mixed_mask{};
};

constexpr PairTables make_tables() {
    PairTables t;
    for (int b = 0; b < 256; ++b) {
        std::uint8_t pa = 0, po = 0, fb = 0, mm = 0;
        for (int i = 0; i < 4; ++i) {
            const int hi = (b >> (7 - 2 * i)) & 1;
            const int lo = (b >> (6 - 2 * i)) & 1;
            pa = static_cast<std::uint8_t>(pa << 1 | (hi & lo));
            po = static_cast<std::uint8_t>(po << 1 | (hi | lo));
            fb = static_cast<std::uint8_t>(fb << 1 | hi);
            mm = static_cast<std::uint8_t>(mm << 1 | (hi ^ lo));
        }
        t.pair_and[b] = pa;
        t.pair_or[b] = po;
        t.first_bits[b] = fb;
        t.mixed_mask[b] = mm;
    }
    return t;
}

constexpr PairTables kTables = make_tables();

} // namespace

BitSeq layer1_encode(std::span<const std::uint8_t> text) {
    return BitSeq::from_bytes(text);
}

std::vector<std::uint8_t> layer1_decode(const BitSeq& bits) {
    return bits.to_bytes();
}

ChannelPair layer23_channels(const BitSeq& bits) {
    if (bits.size() % 8 != 0) {
        throw NotByteAligned("layer23_channels: input must be whole bytes");
    }
    const auto bytes = bits.to_bytes();
    ChannelPair ch;
    // Last byte stacks first; each byte contributes its reversed pair nibble.
    // The concatenation equals the full pair stream reversed end to end.
    for (auto it = bytes.rbegin(); it != bytes.rend(); ++it) {
        ch.and_channel.append_nibble(rev4(kTables.pair_and[*it]));
        ch.or_channel.append_nibble(rev4(kTables.pair_or[*it]));
    }
    return ch;
}

BitSeq channels_to_pairs(const ChannelPair& channels, const IndicatorSideband& directions) {
    const BitSeq& and_ch = channels.and_channel;
    const BitSeq& or_ch = channels.or_channel;
    if (and_ch.size() != or_ch.size()) {
        throw SidebandMismatch("channels_to_pairs: channel lengths differ");
    }
    const std::size_t pair_count = and_ch.size();
    BitSeq out;
    auto entry = directions.entries().begin();
    const auto end = directions.entries().end();
    for (std::size_t i = 0; i < pair_count; ++i) {
        // original pair i sits at channel position pair_count-1-i
        const std::size_t pos = pair_count - 1 - i;
        const bool a = and_ch[pos];
        const bool o = or_ch[pos];
        if (a && !o) {
            throw DominanceViolated("channels_to_pairs: and=1, or=0 at pair " + std::to_string(i));
        }
        if (a == o) {
            out.push_back(a);
            out.push_back(a);
            continue;
        }
        if (entry == end || entry->position != i) {
            throw SidebandMismatch("channels_to_pairs: no direction for mixed pair " + std::to_string(i));
        }
        const bool fall = entry->direction == Direction::fall;
        out.push_back(fall);
        out.push_back(!fall);
        ++entry;
    }
    if (entry != end) {
        throw SidebandMismatch("channels_to_pairs: direction entries beyond mixed pairs");
    }
    return out;
}

CollapsedStream layer4_collapse(const BitSeq& bits) {
    if (bits.size() % 2 != 0) {
        throw OddLength("layer4_collapse: length " + std::to_string(bits.size()) + " is odd");
    }
    CollapsedStream out;
    if (bits.size() % 8 == 0) {
        std::uint64_t pair_index = 0;
        for (const std::uint8_t b : bits.storage()) {
            out.collapsed.append_nibble(kTables.first_bits[b]);
            std::uint8_t mm = kTables.mixed_mask[b];
            if (mm != 0) {
                const std::uint8_t fb = kTables.first_bits[b];
                for (int i = 0; i < 4; ++i) {
                    if (mm & (0x8 >> i)) {
                        const bool fall = (fb >> (3 - i)) & 1;
                        out.sideband.append(pair_index + i, fall ? Direction::fall : Direction::rise);
                    }
                }
            }
            pair_index += 4;
        }
        return out;
    }
    for (std::size_t i = 0; 2 * i < bits.size(); ++i) {
        const bool first = bits[2 * i];
        const bool second = bits[2 * i + 1];
        out.collapsed.push_back(first);
        if (first != second) {
            out.sideband.append(i, first ? Direction::fall : Direction::rise);
        }
    }
    return out;
}

BitSeq layer4_expand(const CollapsedStream& stream) {
    const std::size_t pair_count = stream.collapsed.size();
    for (const auto& e : stream.sideband.entries()) {
        if (e.position >= pair_count) {
            throw PositionOutOfRange("layer4_expand: sideband position " + std::to_string(e.position) +
                                     " >= pair count " + std::to_string(pair_count));
        }
    }
    BitSeq out;
    auto entry = stream.sideband.entries().begin();
    const auto end = stream.sideband.entries().end();
    for (std::size_t i = 0; i < pair_count; ++i) {
        if (entry != end && entry->position == i) {
            const bool fall = entry->direction == Direction::fall;
            out.push_back(fall);
            out.push_back(!fall);
            ++entry;
        } else {
            const bool c = stream.collapsed[i];
            out.push_back(c);
            out.push_back(c);
        }
    }
    return out;
}

std::pair<BitSeq, std::size_t> pad_to_word(const BitSeq& bits, unsigned word) {
    if (word != 8 && word != 16 && word != 32 && word != 64) {
        throw Error("pad_to_word: word length must be 8, 16, 32 or 64");
    }
    const std::size_t rem = bits.size() % word;
    const std::size_t pad = rem == 0 ? 0 : word - rem;
    BitSeq padded = bits;
    for (std::size_t i = 0; i < pad; ++i) {
        padded.push_back(false);
    }
    return {std::move(padded), pad};
}

RemappedChar remap_control_char(std::uint8_t code) {
    if (code == 0x00) {
        return {0x20, true}; // NUL displays as SPACE
    }
    if (code <= 31) {
        return {static_cast<std::uint8_t>(160 + code), true};
    }
    if (code == 127) {
        return {192, true};
    }
    return {code, false};
}

std::uint8_t unmap_control_char(RemappedChar c) {
    if (!c.escaped) {
        return c.code;
    }
    if (c.code == 0x20) {
        return 0x00;
    }
    if (c.code == 192) {
        return 127;
    }
    if (c.code >= 161 && c.code <= 191) {
        return static_cast<std::uint8_t>(c.code - 160);
    }
    throw Error("unmap_control_char: code is not an escape substitute");
}

} // namespace fbar
