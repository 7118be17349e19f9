// solver.hpp -- Preprocess/Solve over the information tree, with three
// query streams answered by two real queries per round.

#pragma once

#include "mastermind/engine.hpp"
#include "mastermind/infotree.hpp"

#include <coroutine>
#include <cstdint>
#include <exception>
#include <functional>
#include <utility>
#include <vector>

namespace mastermind {

/// A resumable computation that alternately emits one signed query and
/// consumes its answer. Starts lazily; the first call to running() drives
/// it to its first request.
///
///     for (auto p = make_process(); p.running();)
///         p.respond(channel(p.request()));
///
/// Inside a process, `int b = co_await ask(q);` emits q and resumes with
/// the answer. Exceptions thrown inside surface from running()/respond().
class QueryProcess
{
public:
    struct promise_type
    {
        const SignedQuery *request = nullptr;
        int answer = 0;
        std::exception_ptr error;

        QueryProcess get_return_object()
        {
            return QueryProcess(std::coroutine_handle<promise_type>::from_promise(*this));
        }
        std::suspend_always initial_suspend() noexcept { return {}; }
        std::suspend_always final_suspend() noexcept { return {}; }
        void return_void() noexcept {}
        void unhandled_exception() noexcept { error = std::current_exception(); }
    };

    using handle_type = std::coroutine_handle<promise_type>;

    QueryProcess(QueryProcess &&other) noexcept
      : _handle(std::exchange(other._handle, {})), _started(other._started)
    {
    }
    QueryProcess &operator=(QueryProcess &&other) noexcept
    {
        if (this != &other) {
            reset();
            _handle = std::exchange(other._handle, {});
            _started = other._started;
        }
        return *this;
    }
    QueryProcess(const QueryProcess &) = delete;
    QueryProcess &operator=(const QueryProcess &) = delete;
    ~QueryProcess() { reset(); }

    /// True while a request is pending.
    bool running();

    /// The pending request. Valid until the next respond().
    const SignedQuery &request() const { return *_handle.promise().request; }

    /// Delivers the answer to the pending request and runs to the next one.
    void respond(int answer);

private:
    explicit QueryProcess(handle_type h) : _handle(h) {}

    void resume();
    void reset() noexcept
    {
        if (_handle)
            _handle.destroy();
        _handle = {};
    }

    handle_type _handle;
    bool _started = false;
};

/// Awaitable used inside a QueryProcess: `int b = co_await ask(q);`.
/// `q` must outlive the suspension, which temporaries in the same
/// full-expression do.
struct ask
{
    explicit ask(const SignedQuery &q) noexcept : query(q) {}

    const SignedQuery &query;
    QueryProcess::handle_type caller{};

    bool await_ready() const noexcept { return false; }
    void await_suspend(QueryProcess::handle_type h) noexcept
    {
        caller = h;
        h.promise().request = &query;
    }
    int await_resume() const noexcept { return caller.promise().answer; }
};

struct CombinedQueries
{
    SignedQuery w1; // q1 + q2 + s
    SignedQuery w2; // q1 - q2
};

struct DecodedAnswers
{
    int q1 = 0;
    int q2 = 0;
    int s = 0;

    bool operator==(const DecodedAnswers &) const = default;
};

/// Packs three disjointly supported queries, s zero-one shaped, into two.
/// Throws UsageError on overlapping supports, mismatched lengths or a
/// badly shaped s.
CombinedQueries combine3(const SignedQuery &q1, const SignedQuery &q2, const SignedQuery &s);

/// Inverts combine3 on the answers: b(s) is the parity of b(w1) + b(w2)
/// (taken nonnegative), the rest follows from the two linear equations.
DecodedAnswers decode3(int bw1, int bw2);

/// One combined round, reported to the optional observer.
struct CombinedRound
{
    SignedQuery q1, q2, s;
    CombinedQueries emitted;
    int bw1 = 0;
    int bw2 = 0;
    DecodedAnswers decoded;
};

using AnswerChannel = std::function<int(const SignedQuery &)>;
using RoundObserver = std::function<void(const CombinedRound &)>;

/// Shared by every process of one solve. Processes touch only the tokens
/// inside their own subtree.
struct SolverContext
{
    const TreeShape &shape;
    TokenState &state;
    RoundObserver on_round;
};

/// Preprocess for the subtree rooted at v. Emits only token queries.
QueryProcess preprocess_process(SolverContext &ctx, Vertex v);

/// Solve for a preprocessed subtree rooted at v.
QueryProcess solve_process(SolverContext &ctx, Vertex v);

/// Drives a process to completion against `channel`; returns the number
/// of requests answered.
std::int64_t drive(QueryProcess &process, const AnswerChannel &channel);

/// Whole-tree Preprocess and Solve. Each returns the signed queries spent.
std::int64_t preprocess(const TreeShape &shape, TokenState &state, const AnswerChannel &channel,
                        RoundObserver on_round = {});
std::int64_t solve(const TreeShape &shape, TokenState &state, const AnswerChannel &channel,
                   RoundObserver on_round = {});

struct SignedSolveResult
{
    std::vector<Color> permutation;
    std::int64_t preprocess_queries = 0;
    std::int64_t solve_queries = 0;
    int tree_leaves = 1;

    std::int64_t total() const noexcept { return preprocess_queries + solve_queries; }
};

/// Recovers a hidden permutation of [n] from signed queries answered by
/// `channel`. Deterministic: no randomness anywhere in this path.
SignedSolveResult run_signed_solver(int n, const AnswerChannel &channel,
                                    RoundObserver on_round = {});

} // namespace mastermind
