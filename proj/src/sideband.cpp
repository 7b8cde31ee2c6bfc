#include "fbar/sideband.hpp"

namespace fbar {

namespace detail {

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t value) {
    while (value >= 0x80) {
        out.push_back(static_cast<std::uint8_t>(value) | 0x80);
        value >>= 7;
    }
    out.push_back(static_cast<std::uint8_t>(value));
}

std::uint64_t get_varint(std::span<const std::uint8_t> data, std::size_t& offset) {
    std::uint64_t value = 0;
    for (unsigned shift = 0;; shift += 7) {
        if (offset >= data.size()) {
            throw TruncatedPayload("varint: ran out of bytes");
        }
        const std::uint8_t byte = data[offset++];
        if (shift == 63 && (byte & 0xFE) != 0) {
            throw SidebandMismatch("varint: value exceeds 64 bits");
        }
        value |= static_cast<std::uint64_t>(byte & 0x7F) << shift;
        if ((byte & 0x80) == 0) {
            return value;
        }
        if (shift >= 63) {
            throw SidebandMismatch("varint: value exceeds 64 bits");
        }
    }
}

} // namespace detail

IndicatorSideband::IndicatorSideband(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].position <= entries_[i - 1].position) {
            throw SidebandMismatch("sideband positions must be strictly increasing");
        }
    }
}

void IndicatorSideband::append(std::uint64_t position, Direction direction) {
    if (!entries_.empty() && position <= entries_.back().position) {
        throw SidebandMismatch("sideband positions must be strictly increasing");
    }
    entries_.push_back(Entry{position, direction});
}

std::vector<std::uint8_t> IndicatorSideband::serialize() const {
    // Empty sideband is zero bytes so pure-pair inputs pay nothing.
    if (entries_.empty()) {
        return {};
    }
    std::vector<std::uint8_t> out;
    detail::put_varint(out, entries_.size());
    std::uint64_t prev = 0;
    bool first = true;
    for (const Entry& e : entries_) {
        detail::put_varint(out, first ? e.position : e.position - prev);
        prev = e.position;
        first = false;
    }
    std::uint8_t acc = 0;
    unsigned used = 0;
    for (const Entry& e : entries_) {
        acc = static_cast<std::uint8_t>(acc << 1 | static_cast<std::uint8_t>(e.direction));
        if (++used == 8) {
            out.push_back(acc);
            acc = 0;
            used = 0;
        }
    }
    if (used != 0) {
        out.push_back(static_cast<std::uint8_t>(acc << (8 - used)));
    }
    return out;
}

IndicatorSideband IndicatorSideband::parse(std::span<const std::uint8_t> data) {
    IndicatorSideband sb;
    if (data.empty()) {
        return sb;
    }
    std::size_t offset = 0;
    const std::uint64_t count = detail::get_varint(data, offset);
    if (count == 0) {
        throw SidebandMismatch("sideband: explicit zero count (empty sideband is zero bytes)");
    }
    if (count > data.size()) {
        // every entry needs at least one delta byte; bound before allocating
        throw SidebandMismatch("sideband: entry count exceeds region capacity");
    }
    sb.entries_.reserve(count);
    std::uint64_t position = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t delta = detail::get_varint(data, offset);
        if (i > 0 && delta == 0) {
            throw SidebandMismatch("sideband: zero delta breaks strict ordering");
        }
        if (i > 0 && position > UINT64_MAX - delta) {
            throw SidebandMismatch("sideband: position overflow");
        }
        position = (i == 0) ? delta : position + delta;
        sb.entries_.push_back(Entry{position, Direction::rise});
    }
    const std::size_t dir_bytes = (count + 7) / 8;
    if (data.size() - offset < dir_bytes) {
        throw TruncatedPayload("sideband: direction bits missing");
    }
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint8_t byte = data[offset + i / 8];
        const bool bit = (byte >> (7 - i % 8)) & 1;
        sb.entries_[i].direction = bit ? Direction::fall : Direction::rise;
    }
    // direction padding must be zero
    if (count % 8 != 0) {
        const std::uint8_t last = data[offset + dir_bytes - 1];
        if ((last & (0xFF >> (count % 8))) != 0) {
            throw SidebandMismatch("sideband: nonzero padding in direction bits");
        }
    }
    offset += dir_bytes;
    if (offset != data.size()) {
        throw SidebandMismatch("sideband: trailing bytes");
    }
    return sb;
}

} // namespace fbar
