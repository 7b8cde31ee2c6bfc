#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fbar/bitseq.hpp"

namespace fbar {

/// Nibble/pair orientation category. Types 0-5 are the fixed nibble arrow
/// patterns (0 = down, 1 = up), type 6 is the dual/fallback class, types 7
/// and 8 are the single mixed pairs (fall, rise). Every class carries a
/// 1-bit flag and a coverage frequency beta.
struct PolarityClass {
    int type_no = 6;
    std::string pattern; // UTF-8 arrows for 0-5, "dual" for 6, single arrow for 7-8
    int flag_bits = 1;
    double beta = 0.125;

    friend bool operator==(const PolarityClass&, const PolarityClass&) = default;
};

/// Maps a 4-bit value to its orientation class. Patterns matching none of
/// the six fixed rows classify as type 6. Total over all 16 nibbles.
PolarityClass classify_nibble(std::uint8_t nibble);

/// Character-level view: a byte whose two nibbles land in different fixed
/// rows is a dual character (type 6) with beta = matched-row-count / 8,
/// clamped to [0.125, 0.75].
PolarityClass classify_char(std::uint8_t byte);

/// 10 -> type 7 (fall), 01 -> type 8 (rise), beta 0.5.
/// Throws NotMixedPair for 00 and 11.
PolarityClass pair_direction(BitPair pair);

/// Collision analysis of channel outputs over an alphabet.
///
/// `pairs` holds the alphabet's disjoint adjacent pairs (positions 0-1, 2-3,
/// ...) with their orientation class: a pair whose two characters produce
/// identical channels (odd orientation) collides and needs the direction
/// sideband to stay distinguishable. `classes` is the exhaustive grouping of
/// ALL alphabet members by channel equality (groups of size >= 2), which is
/// strictly stronger: it also catches collisions across non-adjacent
/// characters.
struct CollisionReport {
    struct AdjacentPair {
        std::uint8_t first = 0;
        std::uint8_t second = 0;
        bool collides = false; // odd orientation

        friend bool operator==(const AdjacentPair&, const AdjacentPair&) = default;
    };

    std::vector<AdjacentPair> pairs;
    std::vector<std::vector<std::uint8_t>> classes;

    std::vector<std::pair<std::uint8_t, std::uint8_t>> colliding_pairs() const;
};

/// Compares channel outputs across `alphabet` (an ordered list): adjacent
/// disjoint pairs for the orientation view plus exhaustive equality classes.
CollisionReport find_collisions(std::span<const std::uint8_t> alphabet);

/// The per-byte channel output (and nibble, or nibble), used as the
/// collision signature.
std::pair<std::uint8_t, std::uint8_t> channel_signature(std::uint8_t byte);

} // namespace fbar
