// pipeline.hpp -- end-to-end codebreakers for every (n, k)

#pragma once

#include "mastermind/engine.hpp"
#include "mastermind/reduction.hpp"

#include <cstdint>

namespace mastermind {

enum class ZeroFinder { Deterministic, Randomized };

struct SolveOptions
{
    /// Only consulted when k = n; other paths always use the deterministic
    /// finder or get their zero string for free.
    ZeroFinder zero_finder = ZeroFinder::Deterministic;
    /// Stop the k > n color census once the counts add up to n.
    bool census_early_stop = true;
    /// Rejected samples allowed per singles stage (0 selects 64 n).
    std::int64_t stage_cap = 0;
};

struct SolveReport
{
    Codeword guess;
    std::int64_t signed_queries = 0;
    std::int64_t preprocess_queries = 0;
    std::int64_t solve_queries = 0;
    std::int64_t singles_samples = 0;
    /// A reduction query happened to be the codeword.
    bool early_win = false;
};

/// k = n. Disjoint singles, zero string, signed solver, final guess.
SolveReport solve_equal(OracleSession &session, Rng &rng, const SolveOptions &options = {});

/// 1 <= k <= n. Zero string over [k] first, then the n-color strategy with
/// every color above k replaced by the zero string's entry.
SolveReport solve_fewer_colors(OracleSession &session, Rng &rng, const SolveOptions &options = {});

/// k > n, black-peg. Monochrome census of the colors, then the n-color
/// strategy over the present colors; an absent color is the zero string.
SolveReport solve_more_colors_blackpeg(OracleSession &session, Rng &rng,
                                       const SolveOptions &options = {});

/// Picks the pipeline for the session's (n, k). Black-white mode with
/// k > n is rejected with UsageError.
SolveReport solve_any(OracleSession &session, Rng &rng, const SolveOptions &options = {});

/// Position-by-position scan against a zero string: at most
/// (n + 1) + n (k - 2) + 1 queries. The scan is charged to Phase::Final.
Codeword baseline_scan(OracleSession &session);

Codeword random_codeword(int n, int k, Rng &rng);

} // namespace mastermind
