#include "fbar/bitseq.hpp"

namespace fbar {
namespace {

// Bit-reversal of the low 4 bits.
constexpr std::uint8_t rev4(std::uint8_t v) {
    return static_cast<std::uint8_t>(((v & 1) << 3) | ((v & 2) << 1) | ((v & 4) >> 1) | ((v & 8) >> 3));
}

constexpr std::uint8_t rev8(std::uint8_t v) {
    return static_cast<std::uint8_t>((rev4(v & 0x0F) << 4) | rev4(v >> 4));
}

} // namespace

BitSeq BitSeq::from_bytes(std::span<const std::uint8_t> data) {
    BitSeq out;
    out.bytes_.assign(data.begin(), data.end());
    out.len_ = data.size() * 8;
    return out;
}

BitSeq BitSeq::from_string(std::string_view zeros_and_ones) {
    BitSeq out;
    for (char c : zeros_and_ones) {
        if (c == '0' || c == '1') {
            out.push_back(c == '1');
        } else if (c == ' ') {
            continue; // allow grouped golden data
        } else {
            throw Error("BitSeq::from_string: invalid character");
        }
    }
    return out;
}

BitSeq BitSeq::from_packed(std::span<const std::uint8_t> packed, std::size_t bit_len) {
    if (bit_len > packed.size() * 8) {
        throw PositionOutOfRange("BitSeq::from_packed: bit length exceeds data");
    }
    BitSeq out;
    out.bytes_.assign(packed.begin(), packed.begin() + static_cast<std::ptrdiff_t>((bit_len + 7) / 8));
    out.len_ = bit_len;
    // keep the canonical all-zero tail so equality stays byte-wise
    if (bit_len % 8 != 0 && !out.bytes_.empty()) {
        out.bytes_.back() &= static_cast<std::uint8_t>(0xFF << (8 - bit_len % 8));
    }
    return out;
}

std::vector<std::uint8_t> BitSeq::to_bytes() const {
    if (len_ % 8 != 0) {
        throw LengthNotByteAligned("to_bytes: length " + std::to_string(len_) + " is not a multiple of 8");
    }
    return bytes_;
}

void BitSeq::push_back(bool bit) {
    if (len_ % 8 == 0) {
        bytes_.push_back(0);
    }
    if (bit) {
        bytes_.back() |= static_cast<std::uint8_t>(0x80 >> (len_ % 8));
    }
    ++len_;
}

void BitSeq::append_nibble(std::uint8_t nibble) {
    nibble &= 0x0F;
    if (len_ % 8 == 0) {
        bytes_.push_back(static_cast<std::uint8_t>(nibble << 4));
        len_ += 4;
        return;
    }
    if (len_ % 8 == 4) {
        bytes_.back() |= nibble;
        len_ += 4;
        return;
    }
    for (int i = 3; i >= 0; --i) {
        push_back((nibble >> i) & 1);
    }
}

void BitSeq::append(const BitSeq& other) {
    if (len_ % 8 == 0) {
        bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
        len_ += other.len_;
        return;
    }
    for (std::size_t i = 0; i < other.len_; ++i) {
        push_back(other[i]);
    }
}

BitSeq BitSeq::prefix(std::size_t n) const {
    if (n > len_) {
        throw PositionOutOfRange("prefix: length out of range");
    }
    return from_packed(bytes_, n);
}

BitSeq BitSeq::reversed() const {
    BitSeq out;
    out.len_ = len_;
    out.bytes_.assign(bytes_.size(), 0);
    if (len_ % 8 == 0) {
        // byte-aligned: reverse byte order, then bits within each byte
        for (std::size_t i = 0; i < bytes_.size(); ++i) {
            out.bytes_[i] = rev8(bytes_[bytes_.size() - 1 - i]);
        }
        return out;
    }
    for (std::size_t i = 0; i < len_; ++i) {
        if ((*this)[len_ - 1 - i]) {
            out.bytes_[i >> 3] |= static_cast<std::uint8_t>(0x80 >> (i & 7));
        }
    }
    return out;
}

std::string BitSeq::to_string() const {
    std::string s;
    s.reserve(len_);
    for (std::size_t i = 0; i < len_; ++i) {
        s.push_back((*this)[i] ? '1' : '0');
    }
    return s;
}

std::vector<BitPair> split_pairs(const BitSeq& seq) {
    if (seq.size() % 2 != 0) {
        throw OddLength("split_pairs: length " + std::to_string(seq.size()) + " is odd");
    }
    std::vector<BitPair> pairs;
    pairs.reserve(seq.size() / 2);
    for (std::size_t i = 0; i < seq.size(); i += 2) {
        pairs.push_back(BitPair{seq[i], seq[i + 1]});
    }
    return pairs;
}

} // namespace fbar
