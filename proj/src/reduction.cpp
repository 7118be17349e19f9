#include "mastermind/reduction.hpp"

#include <string>

namespace mastermind {

ZeroString find_zero_deterministic(OracleSession &session, int n, int k)
{
    if (k < 2)
        throw UsageError("zero string search needs at least two colors");
    if (n != session.n())
        throw UsageError("zero string length does not match the session");

    const auto positions = static_cast<std::size_t>(n);
    ZeroString zero{Query(positions, 1), 0};

    Query probe(positions, 1);
    const int base = session.ask(probe, Phase::ZeroFind).black;
    ++zero.cost;
    if (session.finished())
        return zero;

    for (std::size_t i = 0; i < positions; ++i) {
        probe[i] = 2;
        const int b = session.ask(probe, Phase::ZeroFind).black;
        probe[i] = 1;
        ++zero.cost;
        if (session.finished())
            return zero;

        const int delta = b - base;
        if (delta < -1 || delta > 1)
            throw ProtocolViolation("changing one position moved the score by " +
                                    std::to_string(delta));
        // A drop means c_i = 1, so 2 is safe there; otherwise 1 is.
        zero.query[i] = delta == -1 ? 2 : 1;
    }
    return zero;
}

ZeroString find_zero_randomized(OracleSession &session, int n, Rng &rng, std::int64_t cap)
{
    if (n < 2)
        throw UsageError("randomized zero string search needs n >= 2");
    if (n != session.n())
        throw UsageError("zero string length does not match the session");
    if (cap <= 0)
        cap = 64 * static_cast<std::int64_t>(n);

    std::uniform_int_distribution<Color> color(1, n);
    ZeroString zero{Query(static_cast<std::size_t>(n), 1), 0};
    while (zero.cost < cap) {
        for (auto &e : zero.query.entries)
            e = color(rng);
        const int b = session.ask(zero.query, Phase::ZeroFind).black;
        ++zero.cost;
        if (b == 0 || session.finished())
            return zero;
    }
    throw IterationCapExceeded("no zero string after " + std::to_string(cap) +
                               " random queries; retry with another seed");
}

DisjointSingles find_disjoint_singles(OracleSession &session, int n, Rng &rng,
                                      std::int64_t stage_cap)
{
    if (n < 1)
        throw UsageError("need at least one position");
    if (stage_cap <= 0)
        stage_cap = 64 * static_cast<std::int64_t>(n);

    const auto positions = static_cast<std::size_t>(n);

    // Per-position candidate colors; removal is swap-with-last.
    std::vector<std::vector<Color>> candidates(positions);
    for (auto &set : candidates) {
        set.resize(positions);
        for (std::size_t c = 0; c < positions; ++c)
            set[c] = static_cast<Color>(c + 1);
    }

    DisjointSingles out;
    out.strings.reserve(positions);
    Query sample(positions, 1);
    std::vector<std::size_t> picked(positions);

    for (std::size_t stage = 0; stage < positions; ++stage) {
        const std::size_t remaining = positions - stage;
        std::uniform_int_distribution<std::size_t> slot(0, remaining - 1);
        std::int64_t rejected = 0;
        for (;;) {
            for (std::size_t i = 0; i < positions; ++i) {
                picked[i] = slot(rng);
                sample[i] = candidates[i][picked[i]];
            }
            const int b = session.ask(sample, Phase::Singles).black;
            ++out.samples;
            if (session.finished())
                return out;
            if (b == 1)
                break;
            if (++rejected >= stage_cap)
                throw IterationCapExceeded("singles stage " + std::to_string(stage + 1) +
                                           " rejected " + std::to_string(rejected) +
                                           " samples; retry with another seed");
        }
        out.strings.push_back(sample);
        for (std::size_t i = 0; i < positions; ++i) {
            auto &set = candidates[i];
            set[picked[i]] = set.back();
            set.pop_back();
        }
    }
    return out;
}

Query ColorMap::to_raw(std::span<const Color> permutation) const
{
    Query raw(permutation.size(), 1);
    for (std::size_t i = 0; i < permutation.size(); ++i)
        raw[i] = raw_color(permutation[i], i);
    return raw;
}

void validate_color_map(const ColorMap &map)
{
    const auto n = map.singles.size();
    if (n == 0)
        throw UsageError("color map has no singles");
    if (map.zero.query.size() != n)
        throw UsageError("zero string length does not match the singles");
    std::vector<char> seen(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (const auto &single : map.singles) {
            if (single.size() != n)
                throw UsageError("single has the wrong length");
            const Color c = single[i];
            if (c < 1 || static_cast<std::size_t>(c) > n || seen[static_cast<std::size_t>(c)])
                throw UsageError("singles are not a partition of the colors at position " +
                                 std::to_string(i + 1));
            seen[static_cast<std::size_t>(c)] = 1;
        }
    }
}

std::vector<Color> induced_permutation(const ColorMap &map, std::span<const Color> codeword)
{
    const auto n = map.singles.size();
    if (codeword.size() != n)
        throw UsageError("codeword length does not match the color map");
    std::vector<Color> perm(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (map.singles[j][i] != codeword[i])
                continue;
            if (perm[i] != 0)
                throw ProtocolViolation("two singles match position " + std::to_string(i + 1));
            perm[i] = static_cast<Color>(j + 1);
        }
        if (perm[i] == 0)
            throw ProtocolViolation("no single matches position " + std::to_string(i + 1));
    }
    return perm;
}

int simulate_signed_query(OracleSession &session, const ColorMap &map, const SignedQuery &sq)
{
    const auto n = map.singles.size();
    if (sq.size() != n)
        throw UsageError("signed query length does not match the color map");

    Query plus = map.zero.query;
    Query minus = map.zero.query;
    int positives = 0;
    int negatives = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int e = sq[i];
        if (e == 0)
            continue;
        if (e > static_cast<int>(n) || e < -static_cast<int>(n))
            throw UsageError("signed query entry " + std::to_string(e) + " out of range");
        if (e > 0) {
            plus[i] = map.raw_color(e, i);
            ++positives;
        } else {
            minus[i] = map.raw_color(-e, i);
            ++negatives;
        }
    }

    const int b_plus = session.ask(plus, Phase::SignedSim).black;
    if (b_plus > positives)
        throw ProtocolViolation("q+ scored " + std::to_string(b_plus) + " with only " +
                                std::to_string(positives) + " live positions");
    if (session.finished())
        return b_plus;
    const int b_minus = session.ask(minus, Phase::SignedSim).black;
    if (b_minus > negatives)
        throw ProtocolViolation("q- scored " + std::to_string(b_minus) + " with only " +
                                std::to_string(negatives) + " live positions");
    return b_plus - b_minus;
}

} // namespace mastermind
