// bench.hpp -- run configuration, benchmark records and their serialization

#pragma once

#include "mastermind/engine.hpp"
#include "mastermind/pipeline.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mastermind {

enum class Strategy { Linear, Scan };
enum class OutputFormat { Human, JsonLines, Csv };
enum class CodewordSource { Random, Explicit, Interactive };

struct RunConfig
{
    int n = 0;
    int k = 0; // 0: same as n
    Mode mode = Mode::BlackPeg;
    std::uint64_t seed = 1;
    int trials = 1;
    CodewordSource source = CodewordSource::Random;
    std::vector<Color> codeword; // for CodewordSource::Explicit
    ZeroFinder zero_finder = ZeroFinder::Deterministic;
    OutputFormat format = OutputFormat::Human;
    Strategy strategy = Strategy::Linear;

    /// Fills defaults (n from an explicit codeword, k = n) and throws
    /// UsageError on anything inconsistent.
    void normalize();
};

struct BenchRecord
{
    int n = 0;
    int k = 0;
    Mode mode = Mode::BlackPeg;
    std::uint64_t seed = 0;
    std::array<std::int64_t, phase_count> phases{};
    std::int64_t total = 0;
    int n_t = 1;
    std::int64_t millis = 0;

    std::int64_t phase(Phase p) const noexcept { return phases[static_cast<std::size_t>(p)]; }
};

struct BenchConfig
{
    std::vector<int> sizes;
    int k = 0; // 0: k = n for every size
    Mode mode = Mode::BlackPeg;
    int trials = 1;
    std::uint64_t seed = 1;
    Strategy strategy = Strategy::Linear;
    SolveOptions options;
    /// Wall time is left at 0 unless asked for, so files stay reproducible.
    bool timing = false;
    /// Worker threads; records come back in (size, trial) order regardless.
    int jobs = 1;
};

/// splitmix64 finalizer over master ^ trial.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) noexcept;

/// One finished game.
struct SolveRun
{
    Codeword hidden;
    Codeword guess;
    SolveReport report;
    BenchRecord record;
    std::vector<TranscriptEntry> transcript;
};

/// Plays one game with an honest oracle. The hidden codeword is the
/// explicit one or drawn from the seed; the solver's randomness comes from
/// the same generator afterwards. Throws std::logic_error if the final
/// guess differs from the codeword.
SolveRun run_game(const RunConfig &config, bool record_transcript = true);

/// Every (size, trial) pair in order. `on_record` sees records in output
/// order as they are collected.
std::vector<BenchRecord> bench(const BenchConfig &config,
                               const std::function<void(const BenchRecord &)> &on_record = {});

inline constexpr const char *csv_header =
    "n,k,mode,seed,phase_zero,phase_singles,phase_signed,phase_census,phase_final,total,n_t,millis";

void write_csv_header(std::ostream &os);
void write_csv_row(std::ostream &os, const BenchRecord &record);
void write_jsonl(std::ostream &os, const BenchRecord &record);
void write_human(std::ostream &os, const BenchRecord &record);

/// One object per query: seq, phase, query, black, white.
void write_transcript_jsonl(std::ostream &os, std::span<const TranscriptEntry> transcript);
std::string transcript_line(const TranscriptEntry &entry);

/// Per-size means, for summaries.
struct SizeSummary
{
    int n = 0;
    double mean_total = 0;
    std::int64_t max_total = 0;
    int trials = 0;
};
std::vector<SizeSummary> summarize(std::span<const BenchRecord> records);

} // namespace mastermind
