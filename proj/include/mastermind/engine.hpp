// engine.hpp -- codewords, queries, peg arithmetic and oracle sessions

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mastermind {

/// Colors are 1-based. In signed queries 0 is a blank and a negative
/// entry -f asks for color f with weight -1.
using Color = int;

/// Raised when a caller violates a documented precondition.
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when answers cannot have come from an honest codemaker.
class ProtocolViolation : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a randomized stage exceeds its sampling cap.
class IterationCapExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A guess: n colors, each in [k].
struct Query
{
    std::vector<Color> entries;

    Query() = default;
    explicit Query(std::vector<Color> e) : entries(std::move(e)) {}
    Query(std::initializer_list<Color> e) : entries(e) {}
    Query(std::size_t n, Color fill) : entries(n, fill) {}

    std::size_t size() const noexcept { return entries.size(); }
    Color operator[](std::size_t i) const { return entries[i]; }
    Color &operator[](std::size_t i) { return entries[i]; }

    bool operator==(const Query &) const = default;
};

/// The hidden string. Unlike a bare Query it knows its palette size.
class Codeword
{
public:
    /// Throws UsageError unless every entry lies in [1, colors].
    Codeword(std::vector<Color> entries, int colors);

    int n() const noexcept { return static_cast<int>(_entries.size()); }
    int k() const noexcept { return _colors; }
    std::span<const Color> entries() const noexcept { return _entries; }
    Color operator[](std::size_t i) const { return _entries[i]; }

    Query as_query() const { return Query(_entries); }

    bool operator==(const Codeword &) const = default;

private:
    std::vector<Color> _entries;
    int _colors;
};

/// A signed permutation-Mastermind query over {-n..n}^n.
struct SignedQuery
{
    std::vector<int> entries;

    SignedQuery() = default;
    explicit SignedQuery(std::size_t n) : entries(n, 0) {}
    explicit SignedQuery(std::vector<int> e) : entries(std::move(e)) {}

    std::size_t size() const noexcept { return entries.size(); }
    int operator[](std::size_t i) const { return entries[i]; }
    int &operator[](std::size_t i) { return entries[i]; }

    /// Positions (0-based) holding a nonzero entry.
    std::vector<std::size_t> support() const;
    std::size_t support_size() const;
    bool is_blank() const;

    /// True when every nonzero entry is the same positive color, the shape
    /// of a token query. Against a permutation such a query answers 0 or 1.
    bool is_zero_one_shaped() const;

    bool operator==(const SignedQuery &) const = default;
};

struct Answer
{
    int black = 0;
    std::optional<int> white;

    bool operator==(const Answer &) const = default;
};

enum class Mode { BlackPeg, BlackWhitePeg };

/// Budget bucket every raw query is charged to.
enum class Phase { ZeroFind, Singles, SignedSim, Census, Final };

inline constexpr std::size_t phase_count = 5;

std::string_view phase_name(Phase phase) noexcept;
std::string_view mode_name(Mode mode) noexcept;

/// Number of positions where c and q agree.
int black_pegs(std::span<const Color> c, std::span<const Color> q);
int black_pegs(const Codeword &c, const Query &q);

/// Additional matches obtainable by permuting q, via the min-of-counts
/// identity.
int white_pegs(std::span<const Color> c, std::span<const Color> q);
int white_pegs(const Codeword &c, const Query &q);

/// |{i : c_i = q_i}| - |{i : c_i = -q_i}|; blanks contribute nothing.
int signed_black_pegs(std::span<const Color> c, const SignedQuery &q);
int signed_black_pegs(const Codeword &c, const SignedQuery &q);

/// Whatever answers queries: an honest oracle over a known codeword, a
/// human at a terminal, or a test double.
class Codemaker
{
public:
    virtual ~Codemaker() = default;
    virtual Answer respond(const Query &q, Mode mode) = 0;
};

class HonestCodemaker final : public Codemaker
{
public:
    explicit HonestCodemaker(Codeword codeword) : _codeword(std::move(codeword)) {}

    Answer respond(const Query &q, Mode mode) override;
    const Codeword &codeword() const noexcept { return _codeword; }

private:
    Codeword _codeword;
};

struct TranscriptEntry
{
    std::int64_t seq = 0;   // 1-based
    Phase phase = Phase::Final;
    Query query;            // raw query, after any translation
    Answer answer;
};

/// One game: forwards queries to a codemaker, keeps the transcript and the
/// per-phase counters, and notices the win.
///
/// An optional translation maps the solver's virtual palette onto the raw
/// palette; it is applied before validation, so the transcript always
/// holds raw queries in [k]^n.
class OracleSession
{
public:
    using Translation = std::function<Query(const Query &)>;
    using Observer = std::function<void(const TranscriptEntry &)>;

    OracleSession(int n, int k, Mode mode, std::unique_ptr<Codemaker> codemaker);

    /// Convenience: honest oracle over `codeword`.
    static OracleSession honest(const Codeword &codeword, Mode mode = Mode::BlackPeg);

    int n() const noexcept { return _n; }
    int k() const noexcept { return _k; }
    Mode mode() const noexcept { return _mode; }

    /// Throws UsageError if the game is already won or the (translated)
    /// query is malformed. Throws ProtocolViolation if the codemaker's
    /// answer is out of range.
    Answer ask(const Query &q, Phase phase);

    bool won() const noexcept { return _won; }

    /// Analysis mode: the win is recorded but the codemaker keeps
    /// answering, so a procedure can be measured to completion.
    void set_play_after_win(bool on) noexcept { _play_after_win = on; }

    /// True once no further queries may be asked.
    bool finished() const noexcept { return _won && !_play_after_win; }

    /// The query that won, if any.
    const std::optional<Query> &winning_query() const noexcept { return _winning; }

    std::int64_t total_queries() const noexcept { return _total; }
    std::int64_t phase_queries(Phase phase) const noexcept;
    const std::array<std::int64_t, phase_count> &counters() const noexcept { return _counters; }

    /// Entries are kept only while recording is on (the default). Large
    /// benchmarks switch it off; the counters are kept regardless.
    const std::vector<TranscriptEntry> &transcript() const noexcept { return _transcript; }
    void set_recording(bool on) noexcept { _recording = on; }

    void set_translation(Translation translation) { _translation = std::move(translation); }
    void clear_translation() { _translation = nullptr; }

    void set_observer(Observer observer) { _observer = std::move(observer); }

private:
    int _n;
    int _k;
    Mode _mode;
    std::unique_ptr<Codemaker> _codemaker;
    Translation _translation;
    Observer _observer;
    std::vector<TranscriptEntry> _transcript;
    std::array<std::int64_t, phase_count> _counters{};
    std::int64_t _total = 0;
    bool _recording = true;
    bool _won = false;
    bool _play_after_win = false;
    std::optional<Query> _winning;
};

/// Parses "1,2,3" into colors. Throws UsageError on malformed input.
std::vector<Color> parse_color_list(std::string_view text);

std::string format_colors(std::span<const Color> colors);

} // namespace mastermind
