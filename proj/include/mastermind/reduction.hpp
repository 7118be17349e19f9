// reduction.hpp -- from n-color black-peg Mastermind to signed permutation
// Mastermind: zero strings, disjoint singles, and signed-query simulation.

#pragma once

#include "mastermind/engine.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace mastermind {

using Rng = std::mt19937_64;

/// A full guess known to score zero black pegs.
struct ZeroString
{
    Query query;
    std::int64_t cost = 0;
};

/// Asks the all-ones string and the n strings with a single 2; exactly
/// n + 1 queries unless one of them wins. Requires k >= 2.
ZeroString find_zero_deterministic(OracleSession &session, int n, int k);

/// Samples uniform strings over [n]^n until one scores zero. `cap` bounds
/// the number of samples (0 selects 64 n); exceeding it throws
/// IterationCapExceeded.
ZeroString find_zero_randomized(OracleSession &session, int n, Rng &rng,
                                std::int64_t cap = 0);

struct DisjointSingles
{
    /// strings[j] is the (j+1)-th accepted string; each scores exactly one.
    std::vector<Query> strings;
    /// Queries spent, accepted or not.
    std::int64_t samples = 0;
};

/// Samples each position independently from its remaining candidate
/// colors, keeps samples scoring exactly one and retires their colors
/// position-wise, until n strings are accepted. Returns early (with fewer
/// strings) if a sample happens to win the game.
///
/// `stage_cap` bounds rejected samples per stage (0 selects 64 n).
DisjointSingles find_disjoint_singles(OracleSession &session, int n, Rng &rng,
                                      std::int64_t stage_cap = 0);

/// The disjoint singles plus a zero string: new color j at position i
/// stands for raw color singles[j-1][i].
struct ColorMap
{
    std::vector<Query> singles;
    ZeroString zero;

    int n() const noexcept { return static_cast<int>(singles.size()); }
    Color raw_color(int new_color, std::size_t position) const
    {
        return singles[static_cast<std::size_t>(new_color - 1)][position];
    }

    /// Maps a permutation over new colors back to a raw guess.
    Query to_raw(std::span<const Color> permutation) const;
};

/// Throws UsageError unless the singles are position-wise a partition of
/// [n] and the zero string has the right length.
void validate_color_map(const ColorMap &map);

/// The permutation codeword the map induces on `codeword`: position i gets
/// the unique j with singles[j-1][i] == codeword[i]. Needs oracle access,
/// so it is a test and diagnostics helper. Throws ProtocolViolation if the
/// singles do not cover the codeword exactly once per position.
std::vector<Color> induced_permutation(const ColorMap &map, std::span<const Color> codeword);

/// Answers a signed query over the remapped instance with two raw queries
/// q+ and q-, returning b(q+) - b(q-). If q+ wins, q- is skipped and b(q+)
/// is returned; callers check session.won().
int simulate_signed_query(OracleSession &session, const ColorMap &map, const SignedQuery &sq);

} // namespace mastermind
