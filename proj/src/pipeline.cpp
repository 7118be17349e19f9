#include "mastermind/pipeline.hpp"

#include "mastermind/solver.hpp"

#include <string>

namespace mastermind {

namespace {

/// Thrown out of the signed-query channel when a simulated query wins.
struct GameWon
{
};

class TranslationScope
{
public:
    TranslationScope(OracleSession &session, OracleSession::Translation t) : _session(session)
    {
        _session.set_translation(std::move(t));
    }
    ~TranslationScope() { _session.clear_translation(); }
    TranslationScope(const TranslationScope &) = delete;
    TranslationScope &operator=(const TranslationScope &) = delete;

private:
    OracleSession &_session;
};

SolveReport won_early(const OracleSession &session, SolveReport report = {Codeword({1}, 1)})
{
    report.guess = Codeword(session.winning_query()->entries, session.k());
    report.early_win = true;
    return report;
}

SolveReport single_guess(OracleSession &session, Query guess)
{
    session.ask(guess, Phase::Final);
    if (!session.won())
        throw ProtocolViolation("the only possible codeword was rejected");
    return SolveReport{Codeword(session.winning_query()->entries, session.k())};
}

void require_black_peg_for_many_colors(const OracleSession &session)
{
    if (session.k() > session.n() && session.mode() == Mode::BlackWhitePeg)
        throw UsageError("black-white mode with more colors than positions is not supported; "
                         "use black-peg mode");
}

/// The n-color strategy over the session's (possibly translated) palette.
/// `known_zero` skips the zero string search.
SolveReport solve_linear(OracleSession &session, Rng &rng, const SolveOptions &options,
                         const ZeroString *known_zero)
{
    const int n = session.n();
    SolveReport report{Codeword({1}, 1)};

    DisjointSingles singles = find_disjoint_singles(session, n, rng, options.stage_cap);
    report.singles_samples = singles.samples;
    if (session.won())
        return won_early(session, report);

    ColorMap map;
    map.singles = std::move(singles.strings);
    if (known_zero) {
        map.zero = *known_zero;
    } else {
        map.zero = options.zero_finder == ZeroFinder::Randomized
                       ? find_zero_randomized(session, n, rng)
                       : find_zero_deterministic(session, n, n);
        if (session.won())
            return won_early(session, report);
    }

    const AnswerChannel channel = [&](const SignedQuery &sq) {
        const int b = simulate_signed_query(session, map, sq);
        if (session.won())
            throw GameWon{};
        return b;
    };

    SignedSolveResult result;
    try {
        result = run_signed_solver(n, channel);
    } catch (const GameWon &) {
        return won_early(session, report);
    }
    report.preprocess_queries = result.preprocess_queries;
    report.solve_queries = result.solve_queries;
    report.signed_queries = result.total();

    session.ask(map.to_raw(result.permutation), Phase::Final);
    if (!session.won())
        throw ProtocolViolation("final guess was rejected; the answers are inconsistent");
    report.guess = Codeword(session.winning_query()->entries, session.k());
    return report;
}

} // namespace

SolveReport solve_equal(OracleSession &session, Rng &rng, const SolveOptions &options)
{
    if (session.k() != session.n())
        throw UsageError("solve_equal needs k = n");
    if (session.n() == 1)
        return single_guess(session, Query(1, 1));
    return solve_linear(session, rng, options, nullptr);
}

SolveReport solve_fewer_colors(OracleSession &session, Rng &rng, const SolveOptions &options)
{
    const int n = session.n();
    const int k = session.k();
    if (k > n)
        throw UsageError("solve_fewer_colors needs k <= n");
    if (k == 1)
        return single_guess(session, Query(static_cast<std::size_t>(n), 1));

    const ZeroString zero = find_zero_deterministic(session, n, k);
    if (session.won())
        return won_early(session);

    // Colors above k never match, so the zero entry is an exact stand-in.
    TranslationScope scope(session, [&zero, k](const Query &q) {
        Query raw = q;
        for (std::size_t i = 0; i < raw.size(); ++i)
            if (raw[i] > k)
                raw[i] = zero.query[i];
        return raw;
    });
    return solve_linear(session, rng, options, &zero);
}

SolveReport solve_more_colors_blackpeg(OracleSession &session, Rng &rng,
                                       const SolveOptions &options)
{
    const int n = session.n();
    const int k = session.k();
    if (k <= n)
        throw UsageError("solve_more_colors_blackpeg needs k > n");
    require_black_peg_for_many_colors(session);

    std::vector<Color> present;
    Color absent = 0;
    int counted = 0;
    Color last_asked = 0;
    for (Color color = 1; color <= k; ++color) {
        if (options.census_early_stop && counted == n)
            break;
        const int b = session.ask(Query(static_cast<std::size_t>(n), color), Phase::Census).black;
        last_asked = color;
        if (session.won())
            return won_early(session);
        if (b > 0)
            present.push_back(color);
        else if (absent == 0)
            absent = color;
        counted += b;
        if (counted > n)
            throw ProtocolViolation("color census counts exceed " + std::to_string(n));
    }
    if (counted != n)
        throw ProtocolViolation("color census counts sum to " + std::to_string(counted) +
                                ", expected " + std::to_string(n));
    if (absent == 0)
        absent = last_asked + 1; // everything above the last census query is absent

    const int m = static_cast<int>(present.size());
    TranslationScope scope(session, [&present, absent, m](const Query &q) {
        Query raw = q;
        for (auto &e : raw.entries)
            e = e <= m ? present[static_cast<std::size_t>(e - 1)] : absent;
        return raw;
    });
    // Virtual color n + 1 always translates to the absent color.
    const ZeroString zero{Query(static_cast<std::size_t>(n), n + 1), 0};
    return solve_linear(session, rng, options, &zero);
}

SolveReport solve_any(OracleSession &session, Rng &rng, const SolveOptions &options)
{
    require_black_peg_for_many_colors(session);
    if (session.k() == session.n())
        return solve_equal(session, rng, options);
    if (session.k() < session.n())
        return solve_fewer_colors(session, rng, options);
    return solve_more_colors_blackpeg(session, rng, options);
}

Codeword baseline_scan(OracleSession &session)
{
    const int n = session.n();
    const int k = session.k();
    const auto positions = static_cast<std::size_t>(n);
    if (k == 1)
        return single_guess(session, Query(positions, 1)).guess;

    const ZeroString zero = find_zero_deterministic(session, n, k);
    if (session.won())
        return Codeword(session.winning_query()->entries, k);

    Query guess(positions, 0);
    Query probe = zero.query;
    for (std::size_t i = 0; i < positions; ++i) {
        Color found = 0;
        Color last_candidate = 0;
        for (Color color = 1; color <= k; ++color) {
            if (color == zero.query[i])
                continue;
            // The final candidate needs no query of its own.
            const bool is_last = color == k || (color + 1 == k && zero.query[i] == k);
            if (is_last) {
                last_candidate = color;
                break;
            }
            probe[i] = color;
            const int b = session.ask(probe, Phase::Final).black;
            if (session.won())
                return Codeword(session.winning_query()->entries, k);
            if (b > 1)
                throw ProtocolViolation("single-position probe scored " + std::to_string(b));
            if (b == 1) {
                found = color;
                break;
            }
        }
        probe[i] = zero.query[i];
        guess[i] = found != 0 ? found : last_candidate;
    }

    session.ask(guess, Phase::Final);
    if (!session.won())
        throw ProtocolViolation("final guess was rejected; the answers are inconsistent");
    return Codeword(guess.entries, k);
}

Codeword random_codeword(int n, int k, Rng &rng)
{
    if (n < 1 || k < 1)
        throw UsageError("n and k must be at least 1");
    std::uniform_int_distribution<Color> color(1, k);
    std::vector<Color> entries(static_cast<std::size_t>(n));
    for (auto &e : entries)
        e = color(rng);
    return Codeword(std::move(entries), k);
}

} // namespace mastermind
