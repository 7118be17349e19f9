#include "mastermind/interactive.hpp"

#include "mastermind/pipeline.hpp"

#include <charconv>
#include <istream>
#include <ostream>

namespace mastermind {

StreamCodemaker::StreamCodemaker(std::istream &in, std::ostream &out, int n)
  : _in(in), _out(out), _n(n)
{
}

int StreamCodemaker::read_count(const char *label, int max)
{
    std::string line;
    for (;;) {
        _out << "  " << label << " pegs (0-" << max << ")? " << std::flush;
        if (!std::getline(_in, line))
            throw UsageError("input ended before the game was over");

        auto first = line.find_first_not_of(" \t\r");
        auto last = line.find_last_not_of(" \t\r");
        if (first == std::string::npos) {
            _out << "  please enter a number\n";
            continue;
        }
        std::string_view text(line.data() + first, last - first + 1);
        int value = -1;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            _out << "  '" << text << "' is not a number\n";
            continue;
        }
        if (value < 0 || value > max) {
            _out << "  " << value << " is out of range\n";
            continue;
        }
        return value;
    }
}

Answer StreamCodemaker::respond(const Query &q, Mode mode)
{
    ++_round;
    _out << "Guess " << _round << ": ";
    for (std::size_t i = 0; i < q.size(); ++i)
        _out << (i ? " " : "") << q[i];
    _out << '\n';

    Answer a;
    a.black = read_count("black", _n);
    if (mode == Mode::BlackWhitePeg)
        a.white = read_count("white", _n - a.black);
    return a;
}

PlayOutcome play_interactive(std::istream &in, std::ostream &out, int n, int k, Mode mode,
                             std::uint64_t seed)
{
    PlayOutcome outcome;
    std::optional<OracleSession> session;
    try {
        session.emplace(n, k, mode, std::make_unique<StreamCodemaker>(in, out, n));
        out << "Think of a code of " << n << " colors from 1.." << k
            << ". Answer each guess with the number of pegs.\n";
        Rng rng(seed);
        SolveReport report = solve_any(*session, rng);
        outcome.solved = true;
        outcome.codeword.emplace(report.guess.entries().begin(), report.guess.entries().end());
        outcome.queries = session->total_queries();
        out << "Solved in " << outcome.queries
            << " guesses: " << format_colors(report.guess.entries()) << '\n';
        return outcome;
    } catch (const ProtocolViolation &e) {
        outcome.exit_code = 3;
        outcome.diagnostic = "the answers are inconsistent with any codeword (noticed at guess " +
                             std::to_string(session ? session->total_queries() : 0) + "): " +
                             e.what();
    } catch (const IterationCapExceeded &e) {
        outcome.exit_code = 4;
        outcome.diagnostic = e.what();
    } catch (const UsageError &e) {
        outcome.exit_code = 2;
        outcome.diagnostic = e.what();
    }
    outcome.queries = session ? session->total_queries() : 0;
    out << outcome.diagnostic << '\n';
    return outcome;
}

} // namespace mastermind
