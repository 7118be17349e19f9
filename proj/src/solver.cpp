#include "mastermind/solver.hpp"

#include <array>
#include <cstdlib>
#include <string>

namespace mastermind {

bool QueryProcess::running()
{
    if (!_handle)
        return false;
    if (!_started) {
        _started = true;
        resume();
    }
    return !_handle.done();
}

void QueryProcess::respond(int answer)
{
    if (!_handle || !_started || _handle.done())
        throw UsageError("respond() without a pending request");
    _handle.promise().answer = answer;
    resume();
}

void QueryProcess::resume()
{
    _handle.promise().request = nullptr;
    _handle.resume();
    if (auto error = std::exchange(_handle.promise().error, nullptr))
        std::rethrow_exception(error);
}

CombinedQueries combine3(const SignedQuery &q1, const SignedQuery &q2, const SignedQuery &s)
{
    const auto n = q1.size();
    if (q2.size() != n || s.size() != n)
        throw UsageError("combined queries must have equal length");
    if (!s.is_zero_one_shaped())
        throw UsageError("third combined query must be a zero-one token query");

    CombinedQueries out{SignedQuery(n), SignedQuery(n)};
    for (std::size_t i = 0; i < n; ++i) {
        const int nonzero = (q1[i] != 0) + (q2[i] != 0) + (s[i] != 0);
        if (nonzero > 1)
            throw UsageError("combined queries overlap at position " + std::to_string(i + 1));
        out.w1[i] = q1[i] + q2[i] + s[i];
        out.w2[i] = q1[i] - q2[i];
    }
    return out;
}

DecodedAnswers decode3(int bw1, int bw2)
{
    // b(w1) + b(w2) = 2 b(q1) + b(s) with b(s) in {0, 1}.
    const int sum = bw1 + bw2;
    DecodedAnswers d;
    d.s = ((sum % 2) + 2) % 2;
    if ((sum - d.s) % 2 != 0 || (bw1 - bw2 - d.s) % 2 != 0)
        throw ProtocolViolation("combined answers (" + std::to_string(bw1) + ", " +
                                std::to_string(bw2) + ") do not decode exactly");
    d.q1 = (sum - d.s) / 2;
    d.q2 = (bw1 - bw2 - d.s) / 2;
    return d;
}

namespace {

void check_capacity(const SolverContext &ctx, Vertex v)
{
    const auto tokens = ctx.state.tokens_at(v).size();
    const auto room = static_cast<std::size_t>(ctx.shape.clamped(v).size());
    if (tokens > room)
        throw ProtocolViolation(std::to_string(tokens) + " tokens claim an interval of " +
                                std::to_string(room) + " positions");
}

void check_decoded(const DecodedAnswers &d, const SignedQuery &q1, const SignedQuery &q2,
                   const SignedQuery &s)
{
    const auto fits = [](int answer, const SignedQuery &q) {
        return static_cast<std::size_t>(std::abs(answer)) <= q.support_size();
    };
    if (!fits(d.q1, q1) || !fits(d.q2, q2) || !fits(d.s, s))
        throw ProtocolViolation("decoded answers (" + std::to_string(d.q1) + ", " +
                                std::to_string(d.q2) + ", " + std::to_string(d.s) +
                                ") exceed their query supports");
}

} // namespace

QueryProcess preprocess_process(SolverContext &ctx, Vertex v)
{
    const TreeShape &shape = ctx.shape;
    TokenState &state = ctx.state;
    const int leaves = shape.leaves_below(v);
    if (leaves == 1)
        co_return;

    check_capacity(ctx, v);

    if (leaves == 2) {
        const auto tokens = state.sorted_tokens_at(v);
        if (tokens.empty())
            co_return;
        if (right_half_is_phantom(shape, v)) {
            slide_token(shape, state, tokens.front(), 1);
            co_return;
        }
        // With two tokens the second goes wherever the first does not.
        const int a = co_await ask(token_query(shape, state, tokens.front()));
        slide_token(shape, state, tokens.front(), a);
        if (tokens.size() == 2)
            slide_token(shape, state, tokens.back(), a == 1 ? 0 : 1);
        co_return;
    }

    for (const Vertex at : {v, v.left()}) {
        check_capacity(ctx, at);
        const bool forced_left = right_half_is_phantom(shape, at);
        for (Color t : state.sorted_tokens_at(at)) {
            if (forced_left)
                slide_token(shape, state, t, 1);
            else
                slide_token(shape, state, t, co_await ask(token_query(shape, state, t)));
        }
    }

    for (const Vertex child : {v.left().left(), v.left().right()})
        for (auto p = preprocess_process(ctx, child); p.running();)
            p.respond(co_await ask(p.request()));
}

QueryProcess solve_process(SolverContext &ctx, Vertex v)
{
    const TreeShape &shape = ctx.shape;
    if (shape.leaves_below(v) <= 2)
        co_return;

    std::array<QueryProcess, 3> procs{
        solve_process(ctx, v.left().left()),
        solve_process(ctx, v.left().right()),
        preprocess_process(ctx, v.right()),
    };
    const SignedQuery blank(static_cast<std::size_t>(shape.n()));

    for (;;) {
        std::array<bool, 3> live{};
        int live_count = 0;
        for (std::size_t i = 0; i < procs.size(); ++i) {
            live[i] = procs[i].running();
            live_count += live[i];
        }
        if (live_count == 0)
            break;

        if (live_count == 1) {
            // Nothing to combine with: pass the request straight through.
            for (std::size_t i = 0; i < procs.size(); ++i)
                if (live[i])
                    procs[i].respond(co_await ask(procs[i].request()));
            continue;
        }

        const SignedQuery &q1 = live[0] ? procs[0].request() : blank;
        const SignedQuery &q2 = live[1] ? procs[1].request() : blank;
        const SignedQuery &s = live[2] ? procs[2].request() : blank;

        CombinedQueries w = combine3(q1, q2, s);
        const int bw1 = co_await ask(w.w1);
        const int bw2 = co_await ask(w.w2);
        const DecodedAnswers d = decode3(bw1, bw2);
        check_decoded(d, q1, q2, s);

        if (ctx.on_round)
            ctx.on_round(CombinedRound{q1, q2, s, w, bw1, bw2, d});

        // Responding invalidates the request references above.
        if (live[0])
            procs[0].respond(d.q1);
        if (live[1])
            procs[1].respond(d.q2);
        if (live[2])
            procs[2].respond(d.s);
    }

    for (auto p = solve_process(ctx, v.right()); p.running();)
        p.respond(co_await ask(p.request()));
}

std::int64_t drive(QueryProcess &process, const AnswerChannel &channel)
{
    std::int64_t asked = 0;
    while (process.running()) {
        const int answer = channel(process.request());
        ++asked;
        process.respond(answer);
    }
    return asked;
}

std::int64_t preprocess(const TreeShape &shape, TokenState &state, const AnswerChannel &channel,
                        RoundObserver on_round)
{
    SolverContext ctx{shape, state, std::move(on_round)};
    auto process = preprocess_process(ctx, shape.root());
    return drive(process, channel);
}

std::int64_t solve(const TreeShape &shape, TokenState &state, const AnswerChannel &channel,
                   RoundObserver on_round)
{
    SolverContext ctx{shape, state, std::move(on_round)};
    auto process = solve_process(ctx, shape.root());
    return drive(process, channel);
}

SignedSolveResult run_signed_solver(int n, const AnswerChannel &channel, RoundObserver on_round)
{
    const TreeShape shape(n);
    TokenState state(shape);
    SignedSolveResult result;
    result.tree_leaves = shape.leaves();
    result.preprocess_queries = preprocess(shape, state, channel, on_round);
    result.solve_queries = solve(shape, state, channel, on_round);
    result.permutation = extract_codeword(shape, state);
    return result;
}

} // namespace mastermind
