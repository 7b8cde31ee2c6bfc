#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fbar/bitseq.hpp"
#include "fbar/sideband.hpp"

namespace fbar {

/// Parallel AND and OR channels. For input of n bytes each channel holds
/// 4n bits: the pairwise AND (resp. OR) bit stream of the input, reversed
/// end to end. The reversal makes nibble i of a channel the bit-reversed
/// pair nibble of input byte n-1-i, which is exactly the stacked layer-3
/// emission order.
struct ChannelPair {
    BitSeq and_channel;
    BitSeq or_channel;

    friend bool operator==(const ChannelPair&, const ChannelPair&) = default;
};

/// One bit per pair plus the mixed-pair sideband. The collapsed bit is the
/// pair's first bit (the AND-table output); a pure pair reconstructs as
/// 00/11 from it, a mixed pair reconstructs from its sideband direction.
struct CollapsedStream {
    BitSeq collapsed;
    IndicatorSideband sideband;

    friend bool operator==(const CollapsedStream&, const CollapsedStream&) = default;
};

/// Layer 1: text to bits, 8 bits per character, MSB first.
BitSeq layer1_encode(std::span<const std::uint8_t> text);

/// Layer 1 inverse: bits back to bytes. Throws LengthNotByteAligned.
std::vector<std::uint8_t> layer1_decode(const BitSeq& bits);

/// Layers 2+3: pairwise AND/OR channel split with the stacked (reversed)
/// emission order. Throws NotByteAligned unless size() % 8 == 0.
ChannelPair layer23_channels(const BitSeq& bits);

/// Inverse of layer23_channels. `directions` must list exactly the original
/// pair positions where (and, or) = (0, 1), in increasing order. Throws
/// DominanceViolated on any (and, or) = (1, 0) position and SidebandMismatch
/// when the direction list does not match the mixed positions.
BitSeq channels_to_pairs(const ChannelPair& channels, const IndicatorSideband& directions);

/// Layer 4: collapse each pair to its first bit; record every mixed pair
/// (01 or 10) in the sideband with its direction. Throws OddLength.
CollapsedStream layer4_collapse(const BitSeq& bits);

/// Inverse of layer4_collapse. At a sideband position the direction decides
/// the pair (rise = 01, fall = 10); elsewhere the collapsed bit is doubled.
/// Throws PositionOutOfRange when a position is >= collapsed.size().
BitSeq layer4_expand(const CollapsedStream& stream);

/// Pads with zero bits up to the next multiple of `word` (8, 16, 32 or 64).
/// Returns the padded sequence and the number of bits appended.
std::pair<BitSeq, std::size_t> pad_to_word(const BitSeq& bits, unsigned word);

/// A byte after control-character remapping plus the flag needed to invert
/// the remap exactly.
struct RemappedChar {
    std::uint8_t code = 0;
    bool escaped = false;

    friend bool operator==(const RemappedChar&, const RemappedChar&) = default;
};

/// Maps the 33 non-printable codes to printable substitutes: NUL to SPACE,
/// codes 1-31 to 161-191, DEL to 192. Printable codes map to themselves.
RemappedChar remap_control_char(std::uint8_t code);

/// Exact inverse of remap_control_char given the escape flag.
std::uint8_t unmap_control_char(RemappedChar c);

} // namespace fbar
