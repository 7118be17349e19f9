#include "mastermind/solver.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace mastermind;

namespace {

std::vector<Color> random_permutation(int n, std::mt19937_64 &rng)
{
    std::vector<Color> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Honest signed channel over `hidden` that also keeps every request.
struct RecordingChannel
{
    std::vector<Color> hidden;
    std::vector<SignedQuery> requests;

    AnswerChannel channel()
    {
        return [this](const SignedQuery &q) {
            requests.push_back(q);
            return oracle::signed_score(hidden, q.entries);
        };
    }
};

/// Token on a leaf, or on a vertex whose path from the root is
/// (L?)(L?)...(L?)R: pairs starting with L, ending with a single R.
bool preprocessed_position(const TreeShape &t, Vertex v)
{
    if (t.is_leaf(v))
        return true;
    if (v.depth % 2 == 0)
        return false;
    const int path = v.index - 1; // depth bits, MSB first; 1 = right
    for (int bit = 0; bit + 1 < v.depth; bit += 2)
        if ((path >> (v.depth - 1 - bit)) & 1)
            return false;
    return (path & 1) == 1;
}

void check_round(const CombinedRound &r, const std::vector<Color> &hidden)
{
    const auto n = r.q1.size();
    for (std::size_t i = 0; i < n; ++i)
        REQUIRE((r.q1[i] != 0) + (r.q2[i] != 0) + (r.s[i] != 0) <= 1);
    REQUIRE(r.s.is_zero_one_shaped());
    REQUIRE(r.decoded.q1 == oracle::signed_score(hidden, r.q1.entries));
    REQUIRE(r.decoded.q2 == oracle::signed_score(hidden, r.q2.entries));
    REQUIRE(r.decoded.s == oracle::signed_score(hidden, r.s.entries));
}

} // namespace

TEST_SUITE("solver") {

TEST_CASE("combine3 arithmetic")
{
    SignedQuery q1({1, 2, 0, 0, 0, 0});
    SignedQuery q2({0, 0, 3, -4, 0, 0});
    SignedQuery s({0, 0, 0, 0, 6, 0});
    CombinedQueries w = combine3(q1, q2, s);
    CHECK(w.w1 == SignedQuery({1, 2, 3, -4, 6, 0}));
    CHECK(w.w2 == SignedQuery({1, 2, -3, 4, 0, 0}));

    CombinedQueries same = combine3(q1, SignedQuery(6), SignedQuery(6));
    CHECK(same.w1 == q1);
    CHECK(same.w2 == q1);

    CHECK_THROWS_AS(combine3(q1, SignedQuery({0, 5, 0, 0, 0, 0}), s), UsageError);
    CHECK_THROWS_AS(combine3(q1, q2, SignedQuery({0, 0, 0, 0, 6, 5})), UsageError);
    CHECK_THROWS_AS(combine3(q1, q2, SignedQuery({0, 0, 0, 0, -6, 0})), UsageError);
    CHECK_THROWS_AS(combine3(q1, q2, SignedQuery(5)), UsageError);
}

TEST_CASE("decode3")
{
    CHECK(decode3(2, 1) == DecodedAnswers{1, 0, 1});
    CHECK(decode3(0, 0) == DecodedAnswers{0, 0, 0});
    CHECK(decode3(-1, -2) == DecodedAnswers{-2, 0, 1});
    for (int q1 = -6; q1 <= 6; ++q1)
        for (int q2 = -6; q2 <= 6; ++q2)
            for (int s = 0; s <= 1; ++s)
                REQUIRE(decode3(q1 + q2 + s, q1 - q2) == DecodedAnswers{q1, q2, s});
}

TEST_CASE("combine/decode round trip on random disjoint triples")
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 32)(rng);
        const auto hidden = random_permutation(n, rng);
        SignedQuery q1(hidden.size()), q2(hidden.size()), s(hidden.size());
        std::uniform_int_distribution<int> entry(-n, n);
        std::uniform_int_distribution<int> owner(0, 3);
        const int s_color = std::uniform_int_distribution<int>(1, n)(rng);
        for (std::size_t i = 0; i < hidden.size(); ++i) {
            switch (owner(rng)) {
            case 0: q1[i] = entry(rng); break;
            case 1: q2[i] = entry(rng); break;
            case 2: s[i] = s_color; break;
            default: break;
            }
        }
        CombinedQueries w = combine3(q1, q2, s);
        DecodedAnswers d = decode3(oracle::signed_score(hidden, w.w1.entries),
                                   oracle::signed_score(hidden, w.w2.entries));
        REQUIRE(d.q1 == oracle::signed_score(hidden, q1.entries));
        REQUIRE(d.q2 == oracle::signed_score(hidden, q2.entries));
        REQUIRE(d.s == oracle::signed_score(hidden, s.entries));
    }
}

TEST_CASE("combine/decode round trip, exhaustive n <= 4")
{
    for (int n = 1; n <= 4; ++n) {
        // Per position: blank, s, or a nonzero q1/q2 entry.
        std::vector<int> options{0, 100};
        for (int e = -n; e <= n; ++e)
            if (e != 0) {
                options.push_back(e);       // q1 entry
                options.push_back(e + 1000); // q2 entry, offset-tagged
            }
        std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
        long checked = 0;
        for (;;) {
            for (int s_color = 1; s_color <= n; ++s_color) {
                SignedQuery q1(choice.size()), q2(choice.size()), s(choice.size());
                for (std::size_t i = 0; i < choice.size(); ++i) {
                    const int o = options[choice[i]];
                    if (o == 100)
                        s[i] = s_color;
                    else if (o >= 1000 - n && o <= 1000 + n)
                        q2[i] = o - 1000;
                    else
                        q1[i] = o;
                }
                const CombinedQueries w = combine3(q1, q2, s);
                oracle::for_each_permutation(n, [&](const std::vector<int> &hidden) {
                    const DecodedAnswers d = decode3(oracle::signed_score(hidden, w.w1.entries),
                                                     oracle::signed_score(hidden, w.w2.entries));
                    REQUIRE(d.q1 == oracle::signed_score(hidden, q1.entries));
                    REQUIRE(d.q2 == oracle::signed_score(hidden, q2.entries));
                    REQUIRE(d.s == oracle::signed_score(hidden, s.entries));
                    ++checked;
                });
            }
            std::size_t i = 0;
            while (i < choice.size() && ++choice[i] == options.size())
                choice[i++] = 0;
            if (i == choice.size())
                break;
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("query process mechanics")
{
    TreeShape t(2);
    TokenState s(t);
    SolverContext ctx{t, s, {}};
    QueryProcess p = preprocess_process(ctx, t.root());
    REQUIRE(p.running());
    CHECK(p.request() == SignedQuery({1, 0}));
    p.respond(0);
    CHECK_FALSE(p.running());
    CHECK_THROWS_AS(p.respond(0), UsageError);
    CHECK(extract_codeword(t, s) == std::vector<Color>{2, 1});
}

TEST_CASE("preprocess on n_T = 4, identity")
{
    TreeShape t(4);
    TokenState s(t);
    RecordingChannel ch{{1, 2, 3, 4}, {}};
    CHECK(preprocess(t, s, ch.channel()) == 6);
    CHECK(s.position(1) == Vertex{2, 1});
    CHECK(s.position(2) == Vertex{2, 2});
    CHECK(s.position(3) == Vertex{1, 2});
    CHECK(s.position(4) == Vertex{1, 2});
    for (const auto &q : ch.requests)
        CHECK(q.is_zero_one_shaped());
}

TEST_CASE("preprocess on n_T = 2 spends one query")
{
    for (auto hidden : {std::vector<Color>{1, 2}, std::vector<Color>{2, 1}}) {
        TreeShape t(2);
        TokenState s(t);
        RecordingChannel ch{hidden, {}};
        CHECK(preprocess(t, s, ch.channel()) == 1);
        CHECK(extract_codeword(t, s) == hidden);
    }
}

TEST_CASE("preprocessed shape and budget for n <= 16")
{
    std::mt19937_64 rng(8);
    for (int n = 1; n <= 16; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            TreeShape t(n);
            TokenState s(t);
            RecordingChannel ch{random_permutation(n, rng), {}};
            const auto count = preprocess(t, s, ch.channel());
            REQUIRE(count <= 3 * t.leaves());
            for (const auto &q : ch.requests) {
                REQUIRE(q.is_zero_one_shaped());
                const int a = oracle::signed_score(ch.hidden, q.entries);
                REQUIRE((a == 0 || a == 1));
            }
            for (Color f = 1; f <= n; ++f) {
                REQUIRE(preprocessed_position(t, s.position(f)));
                const int p = static_cast<int>(
                    std::find(ch.hidden.begin(), ch.hidden.end(), f) - ch.hidden.begin() + 1);
                REQUIRE(t.clamped(s.position(f)).contains(p));
            }
        }
    }
}

TEST_CASE("solve on n_T = 4 after preprocessing")
{
    TreeShape t(4);
    TokenState s(t);
    RecordingChannel ch{{1, 2, 3, 4}, {}};
    preprocess(t, s, ch.channel());
    const auto count = solve(t, s, ch.channel());
    CHECK(count <= 2);
    CHECK(count == 1); // only Preprocess(T_R) has work: passed straight through
    CHECK(extract_codeword(t, s) == std::vector<Color>{1, 2, 3, 4});
}

TEST_CASE("signed solver edge sizes")
{
    RecordingChannel one{{1}, {}};
    auto r1 = run_signed_solver(1, one.channel());
    CHECK(r1.total() == 0);
    CHECK(r1.permutation == std::vector<Color>{1});

    RecordingChannel two{{2, 1}, {}};
    auto r2 = run_signed_solver(2, two.channel());
    CHECK(r2.total() == 1);
    CHECK(r2.permutation == std::vector<Color>{2, 1});
}

TEST_CASE("signed solver, exhaustive n <= 5 and n = 8")
{
    for (int n : {1, 2, 3, 4, 5, 8}) {
        oracle::for_each_permutation(n, [&](const std::vector<int> &hidden) {
            RecordingChannel ch{hidden, {}};
            auto r = run_signed_solver(n, ch.channel(), [&](const CombinedRound &round) {
                check_round(round, hidden);
            });
            REQUIRE(r.permutation == hidden);
            REQUIRE(r.preprocess_queries <= 3 * r.tree_leaves);
            REQUIRE(r.solve_queries <= 6 * r.tree_leaves);
            REQUIRE(r.total() <= 9 * r.tree_leaves);
        });
    }
}

TEST_CASE("signed solver is deterministic")
{
    std::mt19937_64 rng(12);
    const auto hidden = random_permutation(37, rng);
    RecordingChannel a{hidden, {}};
    RecordingChannel b{hidden, {}};
    run_signed_solver(37, a.channel());
    run_signed_solver(37, b.channel());
    CHECK(a.requests == b.requests);
}

TEST_CASE("signed solver spot checks up to n = 4096")
{
    std::mt19937_64 rng(77);
    for (int n : {6, 7, 12, 31, 100, 255, 257, 1000, 4096}) {
        const auto hidden = random_permutation(n, rng);
        const AnswerChannel channel = [&](const SignedQuery &q) {
            return signed_black_pegs(hidden, q);
        };
        auto r = run_signed_solver(n, channel);
        CHECK(r.permutation == hidden);
        CHECK(r.preprocess_queries <= 3 * r.tree_leaves);
        CHECK(r.solve_queries <= 6 * r.tree_leaves);
    }
}

TEST_CASE("round invariants on non powers of two")
{
    std::mt19937_64 rng(5);
    for (int n = 3; n <= 70; ++n) {
        const auto hidden = random_permutation(n, rng);
        RecordingChannel ch{hidden, {}};
        std::int64_t rounds = 0;
        auto r = run_signed_solver(n, ch.channel(), [&](const CombinedRound &round) {
            check_round(round, hidden);
            ++rounds;
        });
        REQUIRE(r.permutation == hidden);
        REQUIRE(r.total() <= 9 * r.tree_leaves);
        if (n > 8)
            CHECK(rounds > 0);
    }
}

TEST_CASE("lying channels are caught")
{
    SUBCASE("token answer outside {0,1}")
    {
        const AnswerChannel liar = [](const SignedQuery &) { return 2; };
        CHECK_THROWS_AS(run_signed_solver(8, liar), ProtocolViolation);
    }
    SUBCASE("random lies either throw or give a wrong permutation")
    {
        std::mt19937_64 rng(31);
        int caught = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const auto hidden = random_permutation(16, rng);
            std::int64_t asked = 0;
            const std::int64_t lie_at = std::uniform_int_distribution<int>(0, 60)(rng);
            const AnswerChannel channel = [&](const SignedQuery &q) {
                const int honest = signed_black_pegs(hidden, q);
                return asked++ == lie_at ? honest + 1 : honest;
            };
            try {
                auto r = run_signed_solver(16, channel);
                if (asked > lie_at)
                    CHECK(r.permutation != hidden);
            } catch (const ProtocolViolation &) {
                ++caught;
            }
        }
        CHECK(caught > 0);
    }
}

}
