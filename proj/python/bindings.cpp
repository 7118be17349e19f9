// bindings.cpp -- the linear_mastermind._core extension module

#include "mastermind/bench.hpp"
#include "mastermind/solver.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mastermind;

namespace {

Mode parse_mode(const std::string &name)
{
    if (name == "black")
        return Mode::BlackPeg;
    if (name == "bw")
        return Mode::BlackWhitePeg;
    throw UsageError("mode must be 'black' or 'bw', not '" + name + "'");
}

ZeroFinder parse_finder(const std::string &name)
{
    if (name == "det")
        return ZeroFinder::Deterministic;
    if (name == "rand")
        return ZeroFinder::Randomized;
    throw UsageError("zero finder must be 'det' or 'rand', not '" + name + "'");
}

Strategy parse_strategy(const std::string &name)
{
    if (name == "linear")
        return Strategy::Linear;
    if (name == "scan")
        return Strategy::Scan;
    throw UsageError("strategy must be 'linear' or 'scan', not '" + name + "'");
}

py::dict phases_dict(const std::array<std::int64_t, phase_count> &phases)
{
    py::dict d;
    for (std::size_t i = 0; i < phase_count; ++i)
        d[py::str(std::string(phase_name(static_cast<Phase>(i))))] = phases[i];
    return d;
}

py::dict record_dict(const BenchRecord &r)
{
    py::dict d;
    d["n"] = r.n;
    d["k"] = r.k;
    d["mode"] = std::string(mode_name(r.mode));
    d["seed"] = r.seed;
    d["phases"] = phases_dict(r.phases);
    d["total"] = r.total;
    d["n_t"] = r.n_t;
    d["millis"] = r.millis;
    return d;
}

py::dict entry_dict(const TranscriptEntry &e)
{
    py::dict d;
    d["seq"] = e.seq;
    d["phase"] = std::string(phase_name(e.phase));
    d["query"] = e.query.entries;
    d["black"] = e.answer.black;
    d["white"] = e.answer.white ? py::object(py::int_(*e.answer.white)) : py::object(py::none());
    return d;
}

py::dict solve_game(std::optional<std::vector<Color>> codeword, std::optional<int> n, int k,
                    std::uint64_t seed, const std::string &mode, const std::string &zero_finder,
                    const std::string &strategy, bool transcript)
{
    RunConfig c;
    if (codeword) {
        c.source = CodewordSource::Explicit;
        c.codeword = *codeword;
    }
    c.n = n.value_or(0);
    c.k = k;
    c.seed = seed;
    c.mode = parse_mode(mode);
    c.zero_finder = parse_finder(zero_finder);
    c.strategy = parse_strategy(strategy);

    SolveRun run = [&] {
        py::gil_scoped_release release;
        return run_game(c, transcript);
    }();

    py::dict out = record_dict(run.record);
    out["codeword"] = std::vector<Color>(run.hidden.entries().begin(), run.hidden.entries().end());
    out["guess"] = std::vector<Color>(run.guess.entries().begin(), run.guess.entries().end());
    out["signed_queries"] = run.report.signed_queries;
    out["early_win"] = run.report.early_win;
    if (transcript) {
        py::list entries;
        for (const auto &e : run.transcript)
            entries.append(entry_dict(e));
        out["transcript"] = entries;
    }
    return out;
}

py::dict solve_permutation(const std::vector<Color> &hidden)
{
    const int n = static_cast<int>(hidden.size());
    if (n < 1)
        throw UsageError("permutation is empty");
    std::vector<char> seen(hidden.size() + 1);
    for (Color c : hidden) {
        if (c < 1 || c > n || seen[static_cast<std::size_t>(c)])
            throw UsageError("not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(c)] = 1;
    }
    SignedSolveResult r = run_signed_solver(
        n, [&](const SignedQuery &q) { return signed_black_pegs(hidden, q); });
    py::dict d;
    d["permutation"] = r.permutation;
    d["preprocess_queries"] = r.preprocess_queries;
    d["solve_queries"] = r.solve_queries;
    d["total"] = r.total();
    d["n_t"] = r.tree_leaves;
    return d;
}

py::list run_bench(const std::vector<int> &sizes, int k, int trials, std::uint64_t seed,
                   const std::string &mode, const std::string &strategy, int jobs)
{
    BenchConfig b;
    b.sizes = sizes;
    b.k = k;
    b.trials = trials;
    b.seed = seed;
    b.mode = parse_mode(mode);
    b.strategy = parse_strategy(strategy);
    b.jobs = jobs;
    std::vector<BenchRecord> records;
    {
        py::gil_scoped_release release;
        records = bench(b);
    }
    py::list out;
    for (const auto &r : records)
        out.append(record_dict(r));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Black-peg Mastermind codebreaker with a linear query budget";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<ProtocolViolation>(m, "ProtocolViolation", PyExc_RuntimeError);
    py::register_exception<IterationCapExceeded>(m, "IterationCapExceeded", PyExc_RuntimeError);

    m.def("black_pegs",
          [](const std::vector<Color> &c, const std::vector<Color> &q) { return black_pegs(c, q); },
          py::arg("codeword"), py::arg("query"), "Positions where the query matches.");
    m.def("white_pegs",
          [](const std::vector<Color> &c, const std::vector<Color> &q) { return white_pegs(c, q); },
          py::arg("codeword"), py::arg("query"), "Right colors in the wrong place.");
    m.def("signed_black_pegs",
          [](const std::vector<Color> &c, const std::vector<int> &q) {
              return signed_black_pegs(c, SignedQuery(q));
          },
          py::arg("codeword"), py::arg("query"),
          "Matches of positive entries minus matches of negative ones.");
    m.def("combine3",
          [](const std::vector<int> &q1, const std::vector<int> &q2, const std::vector<int> &s) {
              auto w = combine3(SignedQuery(q1), SignedQuery(q2), SignedQuery(s));
              return py::make_tuple(w.w1.entries, w.w2.entries);
          },
          py::arg("q1"), py::arg("q2"), py::arg("s"),
          "Two signed queries whose answers determine all three inputs.");
    m.def("decode3",
          [](int b1, int b2) {
              auto d = decode3(b1, b2);
              return py::make_tuple(d.q1, d.q2, d.s);
          },
          py::arg("b1"), py::arg("b2"), "Inverse of combine3 on the answers.");
    m.def("solve_permutation", &solve_permutation, py::arg("permutation"),
          "Recover a permutation of 1..n with the signed-query solver.");
    m.def("solve", &solve_game, py::arg("codeword") = py::none(), py::arg("n") = py::none(),
          py::arg("k") = 0, py::arg("seed") = 1, py::arg("mode") = "black",
          py::arg("zero_finder") = "det", py::arg("strategy") = "linear",
          py::arg("transcript") = false,
          "Play one game against an honest codemaker. Without a codeword one is drawn from the seed.");
    m.def("bench", &run_bench, py::arg("sizes"), py::arg("k") = 0, py::arg("trials") = 1,
          py::arg("seed") = 1, py::arg("mode") = "black", py::arg("strategy") = "linear",
          py::arg("jobs") = 1, "Seeded games for each size, in (size, trial) order.");
    m.def("trial_seed", &trial_seed, py::arg("master"), py::arg("trial"));
}
