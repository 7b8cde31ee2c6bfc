#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fbar/errors.hpp"

namespace fbar {

/// Direction of a mixed bit pair. The numeric value is the bit stored in
/// serialized direction fields: rise (01, "/") = 0, fall (10, "\") = 1.
enum class Direction : std::uint8_t {
    rise = 0,
    fall = 1,
};

/// Ordered list of mixed-pair positions with their directions. Positions are
/// pair indices into the original (unreversed) pair stream and must be
/// strictly increasing.
///
/// Wire form: varint entry count, then per-entry position deltas as varints
/// (first entry: the position; later entries: position - previous position,
/// always >= 1), then one direction bit per entry packed MSB-first.
/// An empty sideband serializes to zero bytes.
class IndicatorSideband {
public:
    struct Entry {
        std::uint64_t position = 0;
        Direction direction = Direction::rise;

        friend bool operator==(const Entry&, const Entry&) = default;
    };

    IndicatorSideband() = default;

    /// Validates strictly increasing positions; throws SidebandMismatch.
    explicit IndicatorSideband(std::vector<Entry> entries);

    /// Appends an entry; position must exceed the last one.
    void append(std::uint64_t position, Direction direction);

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    std::vector<std::uint8_t> serialize() const;

    /// Parses a serialized sideband occupying the whole of `data`.
    /// Throws TruncatedPayload when bytes run out mid-structure and
    /// SidebandMismatch when the bytes are inconsistent (leftover bytes,
    /// varint overflow, nonzero direction padding, zero delta).
    static IndicatorSideband parse(std::span<const std::uint8_t> data);

    friend bool operator==(const IndicatorSideband&, const IndicatorSideband&) = default;

private:
    std::vector<Entry> entries_;
};

namespace detail {

/// Unsigned LEB128.
void put_varint(std::vector<std::uint8_t>& out, std::uint64_t value);

/// Reads a varint at `offset`, advancing it. Throws TruncatedPayload on
/// exhaustion and SidebandMismatch on >64-bit values.
std::uint64_t get_varint(std::span<const std::uint8_t> data, std::size_t& offset);

} // namespace detail

} // namespace fbar
