#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fbar/layers.hpp"
#include "fbar/sideband.hpp"

namespace fbar {

enum class PayloadMode : std::uint8_t {
    channels = 0,  // AND channel, OR channel, direction bits
    collapsed = 1, // collapsed stream, serialized sideband
};

/// Serialized compressed artifact.
///
/// Header (18 bytes):
///   magic "FBAR" | version 0x01 | mode | original_bit_length u64 LE | crc32 u32 LE
/// The crc32 (IEEE polynomial) covers the original bytes. Payload sections
/// are byte padded with zero bits; decode rejects nonzero padding.
///
/// mode 0 payload: AND channel, OR channel (each ceil(P/8) bytes for P =
/// original_bit_length/2, stored in stacked channel order), then one
/// direction bit per mixed pair in increasing original pair position.
///
/// mode 1 payload: collapsed stream (ceil(P/8) bytes, original pair order),
/// then the serialized IndicatorSideband (zero bytes when empty).
struct FbarContainer {
    static constexpr std::array<std::uint8_t, 4> kMagic{'F', 'B', 'A', 'R'};
    static constexpr std::uint8_t kVersion = 0x01;
    static constexpr std::size_t kHeaderSize = 18;

    std::uint8_t mode = 1;
    std::uint64_t original_bit_length = 0;
    std::uint32_t crc32 = 0;
    std::vector<std::uint8_t> payload;

    friend bool operator==(const FbarContainer&, const FbarContainer&) = default;
};

/// CRC-32, IEEE 802.3 polynomial (reflected), as used by zip and png.
std::uint32_t crc32_ieee(std::span<const std::uint8_t> data);

/// Compresses `data` into a container. Deterministic.
FbarContainer encode(std::span<const std::uint8_t> data, PayloadMode mode);

/// Reconstructs the original bytes and verifies the checksum.
/// Throws UnsupportedVersion for an unknown mode byte, TruncatedPayload when
/// the payload is missing bytes the header demands, and ChecksumMismatch for
/// any payload content that cannot reproduce bytes matching the checksum.
std::vector<std::uint8_t> decode(const FbarContainer& container);

std::vector<std::uint8_t> serialize(const FbarContainer& container);

/// Parses the fixed header. Throws BadMagic, UnsupportedVersion,
/// TruncatedPayload. Payload bytes are not interpreted here.
FbarContainer parse(std::span<const std::uint8_t> bytes);

/// decode(parse(bytes))
std::vector<std::uint8_t> decode_bytes(std::span<const std::uint8_t> bytes);

/// Renders the sideband in the zero-byte batch naming scheme, one entry per
/// line, LF endings: rising pairs as "QRAND<p> QROR<p>", falling pairs as
/// "QLAND<p> QLOR<p>", with positions zero padded to a common width of
/// max(2, digits of the largest position).
std::string export_zero_byte_batch(const IndicatorSideband& sideband);

} // namespace fbar
