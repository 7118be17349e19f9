#include "mastermind/infotree.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace mastermind;

TEST_SUITE("infotree") {

TEST_CASE("tree shape")
{
    CHECK(TreeShape(1).leaves() == 1);
    CHECK(TreeShape(1).depth() == 0);
    CHECK(TreeShape(2).leaves() == 2);
    CHECK(TreeShape(5).leaves() == 8);
    CHECK(TreeShape(5).depth() == 3);
    CHECK(TreeShape(8).leaves() == 8);
    for (int n = 2; n <= 5000; ++n) {
        TreeShape t(n);
        REQUIRE(t.leaves() == (1 << t.depth()));
        REQUIRE(n <= t.leaves());
        REQUIRE(t.leaves() < 2 * n);
    }
    CHECK_THROWS_AS(TreeShape(0), UsageError);
}

TEST_CASE("vertex intervals")
{
    TreeShape t(8);
    CHECK(t.interval(t.root()) == Interval{1, 8});
    CHECK(t.interval({1, 2}) == Interval{5, 8});
    CHECK(t.interval({3, 3}) == Interval{3, 3});
    CHECK(t.is_leaf({3, 3}));
    CHECK_THROWS_AS(t.interval({1, 3}), UsageError);
    CHECK_THROWS_AS(t.interval({4, 1}), UsageError);

    TreeShape six(6);
    CHECK(six.clamped({1, 2}) == Interval{5, 6});
    CHECK(six.clamped({2, 4}).empty());
    CHECK(right_half_is_phantom(six, {1, 2}) == true);
    CHECK(right_half_is_phantom(six, {1, 1}) == false);
    CHECK(right_half_is_phantom(six, {2, 3}) == false);
    CHECK(right_half_is_phantom(TreeShape(5), {1, 2}) == true);
}

TEST_CASE("every level partitions [1, n_T]")
{
    TreeShape t(16);
    for (int d = 0; d <= t.depth(); ++d) {
        int next = 1;
        for (int j = 1; j <= (1 << d); ++j) {
            Interval iv = t.interval({d, j});
            CHECK(iv.lo == next);
            next = iv.hi + 1;
            if (d < t.depth()) {
                Interval l = t.interval(Vertex{d, j}.left());
                Interval r = t.interval(Vertex{d, j}.right());
                CHECK(l.lo == iv.lo);
                CHECK(r.hi == iv.hi);
                CHECK(l.hi + 1 == r.lo);
            }
        }
        CHECK(next == 17);
    }
}

TEST_CASE("token queries")
{
    SUBCASE("root of n = 8")
    {
        TreeShape t(8);
        TokenState s(t);
        CHECK(token_query(t, s, 5) == SignedQuery({5, 5, 5, 5, 0, 0, 0, 0}));
    }
    SUBCASE("right child of the root")
    {
        TreeShape t(8);
        TokenState s(t);
        s.move(3, {1, 2});
        CHECK(token_query(t, s, 3) == SignedQuery({0, 0, 0, 0, 3, 3, 0, 0}));
    }
    SUBCASE("clamped at n = 6")
    {
        TreeShape t(6);
        TokenState s(t);
        s.move(2, {1, 2});
        CHECK(token_query(t, s, 2) == SignedQuery({0, 0, 0, 0, 2, 2}));
    }
    SUBCASE("token on a leaf")
    {
        TreeShape t(4);
        TokenState s(t);
        s.move(1, {2, 1});
        CHECK_THROWS_AS(token_query(t, s, 1), UsageError);
    }
}

TEST_CASE("sliding tokens")
{
    TreeShape t(8);
    TokenState s(t);
    slide_token(t, s, 1, 1);
    CHECK(s.position(1) == Vertex{1, 1});
    slide_token(t, s, 2, 0);
    CHECK(s.position(2) == Vertex{1, 2});
    CHECK_THROWS_AS(slide_token(t, s, 3, 2), ProtocolViolation);
    CHECK_THROWS_AS(slide_token(t, s, 3, -1), ProtocolViolation);
    CHECK(s.position(3) == t.root());

    // Color 4 sits at position 2 of the hidden permutation.
    const std::vector<Color> hidden{1, 4, 2, 3, 5, 6, 7, 8};
    const int answer = signed_black_pegs(hidden, token_query(t, s, 4));
    CHECK(answer == 1);
    slide_token(t, s, 4, answer);
    CHECK(s.position(4) == Vertex{1, 1});
    CHECK(t.interval(s.position(4)).contains(2));

    CHECK(s.tokens_at(t.root()).size() == 5);
    CHECK(s.sorted_tokens_at({1, 1}) == std::vector<Color>{1, 4});
}

TEST_CASE("codeword extraction")
{
    SUBCASE("n = 2")
    {
        TreeShape t(2);
        TokenState s(t);
        s.move(1, {1, 2});
        s.move(2, {1, 1});
        CHECK(extract_codeword(t, s) == std::vector<Color>{2, 1});
    }
    SUBCASE("identity")
    {
        TreeShape t(4);
        TokenState s(t);
        for (Color c = 1; c <= 4; ++c)
            s.move(c, {2, c});
        CHECK(extract_codeword(t, s) == std::vector<Color>{1, 2, 3, 4});
    }
    SUBCASE("errors")
    {
        TreeShape t(4);
        TokenState s(t);
        CHECK_THROWS_AS(extract_codeword(t, s), UsageError);
        for (Color c = 1; c <= 4; ++c)
            s.move(c, {2, 1});
        CHECK_THROWS_AS(extract_codeword(t, s), ProtocolViolation);
    }
    SUBCASE("phantom leaf")
    {
        TreeShape t(3);
        TokenState s(t);
        s.move(1, {2, 1});
        s.move(2, {2, 2});
        s.move(3, {2, 4});
        CHECK_THROWS_AS(extract_codeword(t, s), ProtocolViolation);
    }
}

TEST_CASE("token soundness under honest answers")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 40)(rng);
        std::vector<Color> hidden(static_cast<std::size_t>(n));
        std::iota(hidden.begin(), hidden.end(), 1);
        std::shuffle(hidden.begin(), hidden.end(), rng);
        std::vector<int> where(hidden.size() + 1);
        for (std::size_t p = 0; p < hidden.size(); ++p)
            where[static_cast<std::size_t>(hidden[p])] = static_cast<int>(p + 1);

        TreeShape t(n);
        TokenState s(t);
        std::uniform_int_distribution<Color> pick(1, n);
        for (int step = 0; step < 20 * n; ++step) {
            const Color f = pick(rng);
            const Vertex v = s.position(f);
            if (t.is_leaf(v))
                continue;
            Vertex next;
            if (right_half_is_phantom(t, v)) {
                slide_token(t, s, f, 1);
            } else {
                const SignedQuery q = token_query(t, s, f);
                REQUIRE(q.is_zero_one_shaped());
                const int a = signed_black_pegs(hidden, q);
                REQUIRE((a == 0 || a == 1));
                slide_token(t, s, f, a);
            }
            next = s.position(f);
            REQUIRE(t.clamped(next).contains(where[static_cast<std::size_t>(f)]));
            REQUIRE_FALSE(t.clamped(next).empty());
        }
        // Finish every token and read the permutation back.
        for (Color f = 1; f <= n; ++f) {
            while (!t.is_leaf(s.position(f))) {
                const Vertex v = s.position(f);
                const int a = right_half_is_phantom(t, v)
                                  ? 1
                                  : signed_black_pegs(hidden, token_query(t, s, f));
                slide_token(t, s, f, a);
            }
        }
        REQUIRE(extract_codeword(t, s) == hidden);
    }
}

}
