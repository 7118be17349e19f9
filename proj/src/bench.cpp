#include "mastermind/bench.hpp"

#include "mastermind/infotree.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace mastermind {

void RunConfig::normalize()
{
    if (source == CodewordSource::Explicit) {
        if (codeword.empty())
            throw UsageError("explicit codeword is empty");
        const int len = static_cast<int>(codeword.size());
        if (n == 0)
            n = len;
        else if (n != len)
            throw UsageError("--n " + std::to_string(n) + " disagrees with a codeword of length " +
                             std::to_string(len));
    }
    if (k == 0)
        k = n;
    if (n < 1)
        throw UsageError("n must be at least 1");
    if (k < 1)
        throw UsageError("k must be at least 1");
    if (trials < 1)
        throw UsageError("trials must be at least 1");
    for (Color c : codeword)
        if (c < 1 || c > k)
            throw UsageError("codeword color " + std::to_string(c) + " is outside 1.." +
                             std::to_string(k));
    if (mode == Mode::BlackWhitePeg && k > n)
        throw UsageError("black-white mode with more colors than positions is not supported");
    if (zero_finder == ZeroFinder::Randomized && k != n)
        throw UsageError("the randomized zero finder needs k = n");
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) noexcept
{
    std::uint64_t z = (master ^ trial) + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SolveRun run_game(const RunConfig &input, bool record_transcript)
{
    RunConfig config = input;
    config.normalize();
    if (config.source == CodewordSource::Interactive)
        throw UsageError("interactive games go through play_interactive");

    Rng rng(config.seed);
    Codeword hidden = config.source == CodewordSource::Explicit
                          ? Codeword(config.codeword, config.k)
                          : random_codeword(config.n, config.k, rng);

    OracleSession session = OracleSession::honest(hidden, config.mode);
    session.set_recording(record_transcript);

    SolveOptions options;
    options.zero_finder = config.zero_finder;

    const auto start = std::chrono::steady_clock::now();
    SolveReport report{Codeword({1}, 1)};
    if (config.strategy == Strategy::Scan)
        report.guess = baseline_scan(session);
    else
        report = solve_any(session, rng, options);
    const auto elapsed = std::chrono::steady_clock::now() - start;

    if (!(report.guess == hidden) || !session.won())
        throw std::logic_error("solver finished with a wrong codeword");

    BenchRecord record;
    record.n = config.n;
    record.k = config.k;
    record.mode = config.mode;
    record.seed = config.seed;
    record.phases = session.counters();
    record.total = session.total_queries();
    record.n_t = TreeShape(config.n).leaves();
    record.millis = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

    Codeword guess = report.guess;
    return SolveRun{std::move(hidden), std::move(guess), std::move(report), record,
                    session.transcript()};
}

std::vector<BenchRecord> bench(const BenchConfig &config,
                               const std::function<void(const BenchRecord &)> &on_record)
{
    if (config.sizes.empty())
        throw UsageError("bench needs at least one size");
    if (config.trials < 1)
        throw UsageError("trials must be at least 1");

    struct Job
    {
        RunConfig run;
    };
    std::vector<Job> jobs;
    for (int n : config.sizes) {
        for (int t = 0; t < config.trials; ++t) {
            RunConfig run;
            run.n = n;
            run.k = config.k == 0 ? n : config.k;
            run.mode = config.mode;
            run.seed = trial_seed(config.seed, static_cast<std::uint64_t>(t));
            run.zero_finder = config.options.zero_finder;
            run.strategy = config.strategy;
            run.normalize();
            jobs.push_back({run});
        }
    }

    std::vector<BenchRecord> records(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
            try {
                records[i] = run_game(jobs[i].run, false).record;
                if (!config.timing)
                    records[i].millis = 0;
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const int threads = std::max(1, config.jobs);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    for (std::size_t i = 0; i < records.size(); ++i) {
        if (errors[i])
            std::rethrow_exception(errors[i]);
        if (on_record)
            on_record(records[i]);
    }
    return records;
}

void write_csv_header(std::ostream &os)
{
    os << csv_header << '\n';
}

void write_csv_row(std::ostream &os, const BenchRecord &r)
{
    os << r.n << ',' << r.k << ',' << mode_name(r.mode) << ',' << r.seed;
    for (auto count : r.phases)
        os << ',' << count;
    os << ',' << r.total << ',' << r.n_t << ',' << r.millis << '\n';
}

void write_jsonl(std::ostream &os, const BenchRecord &r)
{
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["mode"] = mode_name(r.mode);
    j["seed"] = r.seed;
    j["phase_zero"] = r.phase(Phase::ZeroFind);
    j["phase_singles"] = r.phase(Phase::Singles);
    j["phase_signed"] = r.phase(Phase::SignedSim);
    j["phase_census"] = r.phase(Phase::Census);
    j["phase_final"] = r.phase(Phase::Final);
    j["total"] = r.total;
    j["n_t"] = r.n_t;
    j["millis"] = r.millis;
    os << j.dump() << '\n';
}

void write_human(std::ostream &os, const BenchRecord &r)
{
    os << "n=" << r.n << " k=" << r.k << " mode=" << mode_name(r.mode) << " seed=" << r.seed
       << "\n  queries: " << r.total << " (zero " << r.phase(Phase::ZeroFind) << ", singles "
       << r.phase(Phase::Singles) << ", signed " << r.phase(Phase::SignedSim) << ", census "
       << r.phase(Phase::Census) << ", final " << r.phase(Phase::Final) << ")\n"
       << "  queries/n: " << static_cast<double>(r.total) / r.n << "  n_T: " << r.n_t << '\n';
}

std::string transcript_line(const TranscriptEntry &e)
{
    nlohmann::ordered_json j;
    j["seq"] = e.seq;
    j["phase"] = phase_name(e.phase);
    j["query"] = e.query.entries;
    j["black"] = e.answer.black;
    if (e.answer.white)
        j["white"] = *e.answer.white;
    else
        j["white"] = nullptr;
    return j.dump();
}

void write_transcript_jsonl(std::ostream &os, std::span<const TranscriptEntry> transcript)
{
    for (const auto &e : transcript)
        os << transcript_line(e) << '\n';
}

std::vector<SizeSummary> summarize(std::span<const BenchRecord> records)
{
    std::map<int, SizeSummary> by_size;
    for (const auto &r : records) {
        auto &s = by_size[r.n];
        s.n = r.n;
        s.mean_total += static_cast<double>(r.total);
        s.max_total = std::max(s.max_total, r.total);
        ++s.trials;
    }
    std::vector<SizeSummary> out;
    for (auto &[n, s] : by_size) {
        s.mean_total /= s.trials;
        out.push_back(s);
    }
    return out;
}

} // namespace mastermind
