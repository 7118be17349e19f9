#include "mastermind/engine.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace mastermind {

namespace {

void require_same_length(std::size_t a, std::size_t b)
{
    if (a != b)
        throw UsageError("codeword and query lengths differ (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
}

} // namespace

Codeword::Codeword(std::vector<Color> entries, int colors)
  : _entries(std::move(entries)), _colors(colors)
{
    if (colors < 1)
        throw UsageError("codeword needs at least one color");
    if (_entries.empty())
        throw UsageError("codeword needs at least one position");
    for (Color c : _entries)
        if (c < 1 || c > colors)
            throw UsageError("codeword color " + std::to_string(c) + " outside [1, " +
                             std::to_string(colors) + "]");
}

std::vector<std::size_t> SignedQuery::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i] != 0)
            out.push_back(i);
    return out;
}

std::size_t SignedQuery::support_size() const
{
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](int e) { return e != 0; }));
}

bool SignedQuery::is_blank() const
{
    return std::all_of(entries.begin(), entries.end(), [](int e) { return e == 0; });
}

bool SignedQuery::is_zero_one_shaped() const
{
    int color = 0;
    for (int e : entries) {
        if (e == 0)
            continue;
        if (e < 0)
            return false;
        if (color == 0)
            color = e;
        else if (e != color)
            return false;
    }
    return true;
}

std::string_view phase_name(Phase phase) noexcept
{
    switch (phase) {
    case Phase::ZeroFind: return "zero";
    case Phase::Singles: return "singles";
    case Phase::SignedSim: return "signed";
    case Phase::Census: return "census";
    case Phase::Final: return "final";
    }
    return "unknown";
}

std::string_view mode_name(Mode mode) noexcept
{
    return mode == Mode::BlackPeg ? "black" : "bw";
}

int black_pegs(std::span<const Color> c, std::span<const Color> q)
{
    require_same_length(c.size(), q.size());
    int hits = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        hits += (c[i] == q[i]);
    return hits;
}

int black_pegs(const Codeword &c, const Query &q)
{
    return black_pegs(c.entries(), q.entries);
}

int white_pegs(std::span<const Color> c, std::span<const Color> q)
{
    require_same_length(c.size(), q.size());
    Color top = 0;
    for (Color x : c)
        top = std::max(top, x);
    for (Color x : q)
        top = std::max(top, x);

    std::vector<int> count_c(static_cast<std::size_t>(top) + 1, 0);
    std::vector<int> count_q(count_c.size(), 0);
    for (Color x : c)
        if (x > 0)
            ++count_c[static_cast<std::size_t>(x)];
    for (Color x : q)
        if (x > 0)
            ++count_q[static_cast<std::size_t>(x)];

    int common = 0;
    for (std::size_t color = 1; color < count_c.size(); ++color)
        common += std::min(count_c[color], count_q[color]);
    return common - black_pegs(c, q);
}

int white_pegs(const Codeword &c, const Query &q)
{
    return white_pegs(c.entries(), q.entries);
}

int signed_black_pegs(std::span<const Color> c, const SignedQuery &q)
{
    require_same_length(c.size(), q.size());
    int score = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        int e = q[i];
        if (e > 0 && c[i] == e)
            ++score;
        else if (e < 0 && c[i] == -e)
            --score;
    }
    return score;
}

int signed_black_pegs(const Codeword &c, const SignedQuery &q)
{
    return signed_black_pegs(c.entries(), q);
}

Answer HonestCodemaker::respond(const Query &q, Mode mode)
{
    Answer a;
    a.black = black_pegs(_codeword, q);
    if (mode == Mode::BlackWhitePeg)
        a.white = white_pegs(_codeword, q);
    return a;
}

OracleSession::OracleSession(int n, int k, Mode mode, std::unique_ptr<Codemaker> codemaker)
  : _n(n), _k(k), _mode(mode), _codemaker(std::move(codemaker))
{
    if (n < 1 || k < 1)
        throw UsageError("n and k must be at least 1");
    if (!_codemaker)
        throw UsageError("session needs a codemaker");
}

OracleSession OracleSession::honest(const Codeword &codeword, Mode mode)
{
    return OracleSession(codeword.n(), codeword.k(), mode,
                         std::make_unique<HonestCodemaker>(codeword));
}

std::int64_t OracleSession::phase_queries(Phase phase) const noexcept
{
    return _counters[static_cast<std::size_t>(phase)];
}

Answer OracleSession::ask(const Query &q, Phase phase)
{
    if (finished())
        throw UsageError("query asked after the game was won");

    Query raw = _translation ? _translation(q) : q;
    if (raw.size() != static_cast<std::size_t>(_n))
        throw UsageError("query has " + std::to_string(raw.size()) + " positions, expected " +
                         std::to_string(_n));
    for (Color c : raw.entries)
        if (c < 1 || c > _k)
            throw UsageError("query color " + std::to_string(c) + " outside [1, " +
                             std::to_string(_k) + "]");

    Answer a = _codemaker->respond(raw, _mode);
    if (a.black < 0 || a.black > _n)
        throw ProtocolViolation("black peg count " + std::to_string(a.black) +
                                " outside [0, " + std::to_string(_n) + "]");
    if (_mode == Mode::BlackPeg) {
        a.white.reset();
    } else if (!a.white || *a.white < 0 || a.black + *a.white > _n) {
        throw ProtocolViolation("white peg count missing or out of range");
    }

    ++_total;
    ++_counters[static_cast<std::size_t>(phase)];
    if (a.black == _n && !_won) {
        _won = true;
        _winning = raw;
    }

    if (_recording || _observer) {
        TranscriptEntry entry{_total, phase, std::move(raw), a};
        if (_observer)
            _observer(entry);
        if (_recording)
            _transcript.push_back(std::move(entry));
    }
    return a;
}

std::vector<Color> parse_color_list(std::string_view text)
{
    std::vector<Color> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ')
            item.remove_suffix(1);

        Color value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw UsageError("cannot parse color list '" + std::string(text) + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

std::string format_colors(std::span<const Color> colors)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (i)
            os << ',';
        os << colors[i];
    }
    return os.str();
}

} // namespace mastermind
