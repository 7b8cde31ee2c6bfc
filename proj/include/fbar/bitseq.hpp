#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fbar/errors.hpp"

namespace fbar {

/// Ordered sequence of bits with an explicit length. Bits are packed
/// MSB-first: bit 0 of the sequence sits in the most significant bit of
/// byte 0 of the backing store. Unused bits in the last byte are kept zero
/// so that equality can compare the backing store directly.
class BitSeq {
public:
    BitSeq() = default;

    /// 8 bits per input byte, MSB first.
    static BitSeq from_bytes(std::span<const std::uint8_t> data);

    /// Parses a string of '0'/'1' characters; anything else throws.
    /// Intended for tests and golden data, not hot paths.
    static BitSeq from_string(std::string_view zeros_and_ones);

    /// Reinterprets `packed` as a bit sequence of exactly `bit_len` bits.
    /// Requires bit_len <= 8 * packed.size().
    static BitSeq from_packed(std::span<const std::uint8_t> packed, std::size_t bit_len);

    /// Inverse of from_bytes. Throws LengthNotByteAligned unless size() % 8 == 0.
    std::vector<std::uint8_t> to_bytes() const;

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool operator[](std::size_t i) const {
        return (bytes_[i >> 3] >> (7 - (i & 7))) & 1;
    }

    void push_back(bool bit);

    /// Appends the low 4 bits of `nibble`, most significant of the four first.
    void append_nibble(std::uint8_t nibble);

    void append(const BitSeq& other);

    /// First `n` bits as a new sequence. Requires n <= size().
    BitSeq prefix(std::size_t n) const;

    /// Bit i of the result is bit (size()-1-i) of the input. Involutive.
    BitSeq reversed() const;

    std::string to_string() const;

    /// Packed backing store; the tail bits beyond size() are zero.
    std::span<const std::uint8_t> storage() const { return bytes_; }

    friend bool operator==(const BitSeq&, const BitSeq&) = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t len_ = 0;
};

/// One adjacent, non-overlapping bit pair. Classifies to exactly one of
/// {00, 01, 10, 11}.
struct BitPair {
    bool first = false;
    bool second = false;

    friend bool operator==(const BitPair&, const BitPair&) = default;
};

/// The four pair states. rise (01) and fall (10) are the mixed pairs that
/// carry a "/" or "\" indicator; pure pairs collapse to a single bit.
enum class PairSymbol : std::uint8_t {
    pure0 = 0, // 00
    rise = 1,  // 01, "/"
    fall = 2,  // 10, "\"
    pure1 = 3, // 11
};

constexpr PairSymbol classify(BitPair p) {
    return static_cast<PairSymbol>((p.first ? 2 : 0) | (p.second ? 1 : 0));
}

constexpr BitPair to_pair(PairSymbol s) {
    const auto v = static_cast<std::uint8_t>(s);
    return BitPair{(v & 2) != 0, (v & 1) != 0};
}

constexpr bool is_mixed(PairSymbol s) {
    return s == PairSymbol::rise || s == PairSymbol::fall;
}

constexpr char indicator_char(PairSymbol s) {
    switch (s) {
    case PairSymbol::pure0: return '0';
    case PairSymbol::pure1: return '1';
    case PairSymbol::rise: return '/';
    case PairSymbol::fall: return '\\';
    }
    return '?';
}

/// Splits into adjacent non-overlapping pairs, left to right:
/// pair i = (bit 2i, bit 2i+1). Throws OddLength for odd-sized input.
std::vector<BitPair> split_pairs(const BitSeq& seq);

} // namespace fbar
