#include "fbar/container.hpp"

#include <algorithm>

namespace fbar {
namespace {

constexpr std::array<std::uint32_t, 256> make_crc_table() {
    std::array<std::uint32_t, 256> table{};
    for (std::uint32_t n = 0; n < 256; ++n) {
        std::uint32_t c = n;
        for (int k = 0; k < 8; ++k) {
            c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
        }
        table[n] = c;
    }
    return table;
}

constexpr std::array<std::uint32_t, 256> kCrcTable = make_crc_table();

std::uint32_t get_u32le(std::span<const std::uint8_t> in) {
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) {
        v = v << 8 | in[static_cast<std::size_t>(i)];
    }
    return v;
}

std::uint64_t get_u64le(std::span<const std::uint8_t> in) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) {
        v = v << 8 | in[static_cast<std::size_t>(i)];
    }
    return v;
}

std::vector<std::uint8_t> packed_section(const BitSeq& bits) {
    return pad_to_word(bits, 8).first.to_bytes();
}

// Padding bits past bit_len must be zero; any set bit is corruption.
void require_zero_tail(std::span<const std::uint8_t> section, std::size_t bit_len) {
    if (bit_len % 8 == 0) {
        return;
    }
    const std::uint8_t tail = section[(bit_len - 1) / 8] & static_cast<std::uint8_t>(0xFF >> (bit_len % 8));
    if (tail != 0) {
        throw ChecksumMismatch("payload padding bits are not zero");
    }
}

std::vector<std::uint8_t> pack_direction_bits(const IndicatorSideband& sideband) {
    std::vector<std::uint8_t> out((sideband.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < sideband.size(); ++i) {
        if (sideband.entries()[i].direction == Direction::fall) {
            out[i / 8] |= static_cast<std::uint8_t>(0x80 >> (i % 8));
        }
    }
    return out;
}

std::vector<std::uint8_t> decode_mode_channels(const FbarContainer& c, std::size_t pair_count) {
    const std::size_t section_bytes = (pair_count + 7) / 8;
    if (c.payload.size() < 2 * section_bytes) {
        throw TruncatedPayload("payload shorter than its channel sections");
    }
    const std::span<const std::uint8_t> payload{c.payload};
    const auto and_section = payload.subspan(0, section_bytes);
    const auto or_section = payload.subspan(section_bytes, section_bytes);
    require_zero_tail(and_section, pair_count);
    require_zero_tail(or_section, pair_count);
    ChannelPair channels{BitSeq::from_packed(and_section, pair_count),
                         BitSeq::from_packed(or_section, pair_count)};

    // Mixed pairs scan, in original pair order (channel order reversed).
    std::vector<std::uint64_t> mixed;
    for (std::size_t i = 0; i < pair_count; ++i) {
        const std::size_t pos = pair_count - 1 - i;
        const bool a = channels.and_channel[pos];
        const bool o = channels.or_channel[pos];
        if (a && !o) {
            throw ChecksumMismatch("channel dominance violated (and=1, or=0)");
        }
        if (!a && o) {
            mixed.push_back(i);
        }
    }
    const std::size_t dir_bytes = (mixed.size() + 7) / 8;
    if (c.payload.size() != 2 * section_bytes + dir_bytes) {
        throw ChecksumMismatch("direction section size does not match mixed pair count");
    }
    const auto dir_section = payload.subspan(2 * section_bytes);
    require_zero_tail(dir_section, mixed.size());
    IndicatorSideband directions;
    for (std::size_t i = 0; i < mixed.size(); ++i) {
        const bool fall = (dir_section[i / 8] >> (7 - i % 8)) & 1;
        directions.append(mixed[i], fall ? Direction::fall : Direction::rise);
    }
    return channels_to_pairs(channels, directions).to_bytes();
}

std::vector<std::uint8_t> decode_mode_collapsed(const FbarContainer& c, std::size_t pair_count) {
    const std::size_t section_bytes = (pair_count + 7) / 8;
    if (c.payload.size() < section_bytes) {
        throw TruncatedPayload("payload shorter than its collapsed section");
    }
    const std::span<const std::uint8_t> payload{c.payload};
    const auto collapsed_section = payload.subspan(0, section_bytes);
    require_zero_tail(collapsed_section, pair_count);
    CollapsedStream stream;
    stream.collapsed = BitSeq::from_packed(collapsed_section, pair_count);
    try {
        stream.sideband = IndicatorSideband::parse(payload.subspan(section_bytes));
    } catch (const SidebandMismatch& e) {
        throw ChecksumMismatch(std::string("sideband corrupt: ") + e.what());
    }
    for (const auto& e : stream.sideband.entries()) {
        if (e.position >= pair_count) {
            throw ChecksumMismatch("sideband position beyond pair count");
        }
        // In a well-formed container the collapsed bit at a mixed position
        // already encodes the direction; disagreement is corruption.
        const Direction expected = stream.collapsed[e.position] ? Direction::fall : Direction::rise;
        if (e.direction != expected) {
            throw ChecksumMismatch("sideband direction disagrees with collapsed bit");
        }
    }
    return layer4_expand(stream).to_bytes();
}

} // namespace

std::uint32_t crc32_ieee(std::span<const std::uint8_t> data) {
    std::uint32_t c = 0xFFFFFFFFu;
    for (const std::uint8_t b : data) {
        c = kCrcTable[(c ^ b) & 0xFF] ^ (c >> 8);
    }
    return c ^ 0xFFFFFFFFu;
}

FbarContainer encode(std::span<const std::uint8_t> data, PayloadMode mode) {
    FbarContainer c;
    c.mode = static_cast<std::uint8_t>(mode);
    c.original_bit_length = data.size() * 8;
    c.crc32 = crc32_ieee(data);
    const BitSeq bits = layer1_encode(data);
    if (mode == PayloadMode::channels) {
        const ChannelPair channels = layer23_channels(bits);
        const IndicatorSideband sideband = layer4_collapse(bits).sideband;
        c.payload = packed_section(channels.and_channel);
        const auto or_section = packed_section(channels.or_channel);
        c.payload.insert(c.payload.end(), or_section.begin(), or_section.end());
        const auto dirs = pack_direction_bits(sideband);
        c.payload.insert(c.payload.end(), dirs.begin(), dirs.end());
    } else {
        const CollapsedStream stream = layer4_collapse(bits);
        c.payload = packed_section(stream.collapsed);
        const auto sideband = stream.sideband.serialize();
        c.payload.insert(c.payload.end(), sideband.begin(), sideband.end());
    }
    return c;
}

std::vector<std::uint8_t> decode(const FbarContainer& c) {
    if (c.mode != 0 && c.mode != 1) {
        throw UnsupportedVersion("unknown payload mode " + std::to_string(c.mode));
    }
    if (c.original_bit_length % 8 != 0) {
        throw ChecksumMismatch("original bit length is not a whole number of bytes");
    }
    const std::size_t pair_count = static_cast<std::size_t>(c.original_bit_length / 2);
    std::vector<std::uint8_t> data = c.mode == 0 ? decode_mode_channels(c, pair_count)
                                                 : decode_mode_collapsed(c, pair_count);
    if (crc32_ieee(data) != c.crc32) {
        throw ChecksumMismatch("reconstructed data fails the stored checksum");
    }
    return data;
}

std::vector<std::uint8_t> serialize(const FbarContainer& c) {
    std::vector<std::uint8_t> out(FbarContainer::kHeaderSize + c.payload.size());
    std::copy(FbarContainer::kMagic.begin(), FbarContainer::kMagic.end(), out.begin());
    out[4] = FbarContainer::kVersion;
    out[5] = c.mode;
    for (int i = 0; i < 8; ++i) {
        out[6 + static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(c.original_bit_length >> (8 * i));
    }
    for (int i = 0; i < 4; ++i) {
        out[14 + static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(c.crc32 >> (8 * i));
    }
    std::copy(c.payload.begin(), c.payload.end(), out.begin() + FbarContainer::kHeaderSize);
    return out;
}

FbarContainer parse(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < FbarContainer::kHeaderSize) {
        throw TruncatedPayload("container shorter than its header");
    }
    if (!std::equal(FbarContainer::kMagic.begin(), FbarContainer::kMagic.end(), bytes.begin())) {
        throw BadMagic("not an FBAR container");
    }
    if (bytes[4] != FbarContainer::kVersion) {
        throw UnsupportedVersion("container version " + std::to_string(bytes[4]));
    }
    FbarContainer c;
    c.mode = bytes[5];
    c.original_bit_length = get_u64le(bytes.subspan(6, 8));
    c.crc32 = get_u32le(bytes.subspan(14, 4));
    c.payload.assign(bytes.begin() + FbarContainer::kHeaderSize, bytes.end());
    return c;
}

std::vector<std::uint8_t> decode_bytes(std::span<const std::uint8_t> bytes) {
    return decode(parse(bytes));
}

std::string export_zero_byte_batch(const IndicatorSideband& sideband) {
    if (sideband.empty()) {
        return {};
    }
    std::size_t width = 2;
    {
        std::uint64_t max_pos = sideband.entries().back().position;
        std::size_t digits = 1;
        while (max_pos >= 10) {
            max_pos /= 10;
            ++digits;
        }
        width = std::max<std::size_t>(2, digits);
    }
    std::string out;
    for (const auto& e : sideband.entries()) {
        std::string pos = std::to_string(e.position);
        pos.insert(0, width - pos.size(), '0');
        if (e.direction == Direction::rise) {
            out += "QRAND" + pos + " QROR" + pos + "\n";
        } else {
            out += "QLAND" + pos + " QLOR" + pos + "\n";
        }
    }
    return out;
}

} // namespace fbar
