// mastermind -- command-line front end: solve, bench, play

#include "mastermind/bench.hpp"
#include "mastermind/interactive.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

using namespace mastermind;

namespace {

enum ExitCode { ok = 0, usage = 2, protocol = 3, iteration_cap = 4 };

const std::map<std::string, Mode> mode_names{{"black", Mode::BlackPeg}, {"bw", Mode::BlackWhitePeg}};
const std::map<std::string, ZeroFinder> finder_names{{"det", ZeroFinder::Deterministic},
                                                     {"rand", ZeroFinder::Randomized}};
const std::map<std::string, Strategy> strategy_names{{"linear", Strategy::Linear},
                                                     {"scan", Strategy::Scan}};
const std::map<std::string, OutputFormat> solve_formats{{"human", OutputFormat::Human},
                                                        {"jsonl", OutputFormat::JsonLines},
                                                        {"csv", OutputFormat::Csv}};
const std::map<std::string, OutputFormat> bench_formats{{"csv", OutputFormat::Csv},
                                                        {"jsonl", OutputFormat::JsonLines}};

std::ofstream open_output(const std::string &path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

int run_solve(RunConfig config, const std::string &codeword_text, const std::string &transcript)
{
    if (!codeword_text.empty()) {
        config.source = CodewordSource::Explicit;
        config.codeword = parse_color_list(codeword_text);
    }
    if (config.source != CodewordSource::Explicit && config.n == 0)
        throw UsageError("solve needs --n or --codeword");

    SolveRun run = run_game(config);

    switch (config.format) {
    case OutputFormat::Human:
        std::cout << "hidden: " << format_colors(run.hidden.entries()) << '\n'
                  << "guess:  " << format_colors(run.guess.entries()) << '\n';
        write_human(std::cout, run.record);
        break;
    case OutputFormat::JsonLines:
        write_jsonl(std::cout, run.record);
        break;
    case OutputFormat::Csv:
        write_csv_header(std::cout);
        write_csv_row(std::cout, run.record);
        break;
    }

    if (!transcript.empty()) {
        auto out = open_output(transcript);
        write_transcript_jsonl(out, run.transcript);
        if (!out)
            throw std::runtime_error("failed writing transcript '" + transcript + "'");
    }
    return ok;
}

int run_bench(const BenchConfig &config, OutputFormat format, const std::string &path)
{
    std::ofstream file;
    if (!path.empty())
        file = open_output(path);
    std::ostream &out = path.empty() ? std::cout : file;

    if (format == OutputFormat::Csv)
        write_csv_header(out);
    auto records = bench(config, [&](const BenchRecord &r) {
        if (format == OutputFormat::Csv)
            write_csv_row(out, r);
        else
            write_jsonl(out, r);
    });
    if (!out)
        throw std::runtime_error("failed writing bench output");

    if (!path.empty()) {
        for (const auto &s : summarize(records))
            std::cerr << "n=" << s.n << "  mean " << s.mean_total << "  max " << s.max_total
                      << "  mean/n " << s.mean_total / s.n << '\n';
    }
    return ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Black-peg Mastermind codebreaker with a linear query budget"};
    app.require_subcommand(1);

    RunConfig solve_config;
    std::string codeword_text;
    std::string transcript_path;
    auto *solve = app.add_subcommand("solve", "solve one game against a hidden codeword");
    solve->add_option("--n", solve_config.n, "positions");
    solve->add_option("--k", solve_config.k, "colors (default: n)");
    solve->add_option("--mode", solve_config.mode, "black | bw")
        ->transform(CLI::CheckedTransformer(mode_names));
    solve->add_option("--seed", solve_config.seed, "random seed");
    solve->add_option("--codeword", codeword_text, "hidden codeword, e.g. \"1,2,3\"");
    solve->add_option("--zero-finder", solve_config.zero_finder, "det | rand")
        ->transform(CLI::CheckedTransformer(finder_names));
    solve->add_option("--format", solve_config.format, "human | jsonl | csv")
        ->transform(CLI::CheckedTransformer(solve_formats));
    solve->add_option("--strategy", solve_config.strategy, "linear | scan")
        ->transform(CLI::CheckedTransformer(strategy_names));
    solve->add_option("--transcript", transcript_path, "write the query log as json-lines");

    BenchConfig bench_config;
    OutputFormat bench_format = OutputFormat::Csv;
    std::string bench_out;
    auto *bench_cmd = app.add_subcommand("bench", "run many seeded games and record query counts");
    bench_cmd->add_option("--n-list", bench_config.sizes, "sizes, e.g. 64,128,256")
        ->delimiter(',')
        ->required();
    bench_cmd->add_option("--k", bench_config.k, "colors (default: n for each size)");
    bench_cmd->add_option("--mode", bench_config.mode, "black | bw")
        ->transform(CLI::CheckedTransformer(mode_names));
    bench_cmd->add_option("--trials", bench_config.trials, "games per size");
    bench_cmd->add_option("--seed", bench_config.seed, "master seed");
    bench_cmd->add_option("--out", bench_out, "output file (default: stdout)");
    bench_cmd->add_option("--format", bench_format, "csv | jsonl")
        ->transform(CLI::CheckedTransformer(bench_formats));
    bench_cmd->add_option("--zero-finder", bench_config.options.zero_finder, "det | rand")
        ->transform(CLI::CheckedTransformer(finder_names));
    bench_cmd->add_option("--strategy", bench_config.strategy, "linear | scan")
        ->transform(CLI::CheckedTransformer(strategy_names));
    bench_cmd->add_flag("--timing", bench_config.timing, "record wall time (output no longer reproducible)");
    bench_cmd->add_option("--jobs", bench_config.jobs, "worker threads");

    int play_n = 0;
    int play_k = 0;
    Mode play_mode = Mode::BlackPeg;
    std::uint64_t play_seed = 1;
    auto *play = app.add_subcommand("play", "you hold the codeword, the program guesses");
    play->add_option("--n", play_n, "positions")->required();
    play->add_option("--k", play_k, "colors (default: n)");
    play->add_option("--mode", play_mode, "black | bw")
        ->transform(CLI::CheckedTransformer(mode_names));
    play->add_option("--seed", play_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*solve)
            return run_solve(solve_config, codeword_text, transcript_path);
        if (*bench_cmd)
            return run_bench(bench_config, bench_format, bench_out);
        if (*play) {
            RunConfig check;
            check.n = play_n;
            check.k = play_k;
            check.mode = play_mode;
            check.normalize();
            auto outcome = play_interactive(std::cin, std::cout, check.n, check.k, check.mode, play_seed);
            return outcome.exit_code;
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const ProtocolViolation &e) {
        std::cerr << "inconsistent answers: " << e.what() << '\n';
        return protocol;
    } catch (const IterationCapExceeded &e) {
        std::cerr << "gave up: " << e.what() << '\n';
        return iteration_cap;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return ok;
}
