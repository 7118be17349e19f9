// interactive.hpp -- playing against a human codemaker over text streams

#pragma once

#include "mastermind/engine.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace mastermind {

/// Prints each guess and reads the peg counts back. Malformed or
/// out-of-range lines are re-prompted; end of input throws UsageError.
class StreamCodemaker final : public Codemaker
{
public:
    StreamCodemaker(std::istream &in, std::ostream &out, int n);

    Answer respond(const Query &q, Mode mode) override;

private:
    int read_count(const char *label, int max);

    std::istream &_in;
    std::ostream &_out;
    int _n;
    std::int64_t _round = 0;
};

struct PlayOutcome
{
    bool solved = false;
    std::optional<std::vector<Color>> codeword;
    std::int64_t queries = 0;
    /// Why the game stopped, when it did not end in a win.
    std::string diagnostic;
    /// 0 solved, 2 usage error, 3 inconsistent answers, 4 sampling cap.
    int exit_code = 0;
};

/// Runs the codebreaker for (n, k) against answers read from `in`.
/// Inconsistent answers are reported together with the query number where
/// they were noticed.
PlayOutcome play_interactive(std::istream &in, std::ostream &out, int n, int k, Mode mode,
                             std::uint64_t seed);

} // namespace mastermind
