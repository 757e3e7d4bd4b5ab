// Command-line front end: exact system solving with step traces, determinants
// (elimination or brute-force oracles), the cyclic "well" family, and an
// operation-count / entry-growth bench across elimination strategies.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fangcheng/detkit.hpp"
#include "fangcheng/diagonalize.hpp"
#include "fangcheng/eliminate.hpp"
#include "fangcheng/errors.hpp"
#include "fangcheng/randgen.hpp"
#include "fangcheng/ring.hpp"
#include "fangcheng/tableau.hpp"
#include "fangcheng/trace.hpp"
#include "fangcheng/wellprob.hpp"

namespace fc = fangcheng;
using nlohmann::ordered_json;

namespace {

enum class Finish { BackSub, Hart, Jordan };
enum class TraceFormat { None, Board, Json };

struct RunConfig {
    std::string input;
    fc::PivotStrategy strategy = fc::PivotStrategy::Chio;
    fc::PivotPolicy policy = fc::PivotPolicy::Strict;
    Finish finish = Finish::BackSub;
    TraceFormat trace = TraceFormat::None;
    bool moderate_rows = false;
    std::string out_path;

    std::string det_method = "chio";

    std::string coeffs;
    bool well_solve = false;
    std::optional<std::int64_t> well_b;

    int n = 4;
    int trials = 10;
    std::uint64_t seed = 0;
    int range = 9;
    std::string format = "text";
};

int exit_code_for(const fc::Error& e) {
    if (dynamic_cast<const fc::InexactDivision*>(&e))
        return 4;
    if (dynamic_cast<const fc::SizeLimit*>(&e))
        return 5;
    if (dynamic_cast<const fc::ZeroPivot*>(&e) || dynamic_cast<const fc::RankDeficient*>(&e) ||
        dynamic_cast<const fc::SingularLeadingMinor*>(&e) ||
        dynamic_cast<const fc::SingularDiagonal*>(&e) ||
        dynamic_cast<const fc::DivideByZero*>(&e))
        return 3;
    return 2;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw fc::ParseError("cannot open \"" + path + "\"", 1, 1);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ordered_json trace_to_json(const fc::Trace& trace) {
    ordered_json events = ordered_json::array();
    for (const auto& s : trace.snapshots) {
        ordered_json ev;
        ev["step"] = s.step;
        ev["phase"] = fc::phase_name(s.phase);
        ev["pivot"] = {s.pivot_row, s.pivot_col};
        ev["divisor"] = s.divisor;
        ev["swap"] = s.swapped ? ordered_json{s.swapped->first, s.swapped->second}
                               : ordered_json(nullptr);
        ev["tableau"] = s.entries;
        ev["max_bits"] = s.max_bits;
        ev["ops"] = {{"mul", s.ops.mul}, {"div", s.ops.div}, {"addsub", s.ops.addsub()}};
        events.push_back(std::move(ev));
    }
    return events;
}

// One JSON document per run; on the json trace format this is the only thing
// written to stdout (or to --out, with the plain text kept on stdout).
void emit_json_document(const RunConfig& cfg, const fc::Trace& trace, int exit_code,
                        const std::optional<fc::Solution>& solution, bool show_denominator,
                        const std::string& text_output) {
    ordered_json doc;
    doc["phase_events"] = trace_to_json(trace);
    ordered_json result;
    result["exit"] = exit_code;
    if (solution) {
        ordered_json xs = ordered_json::array();
        for (const auto& x : solution->values)
            xs.push_back(fc::to_decimal(x));
        result["solution"] = std::move(xs);
    } else {
        result["solution"] = nullptr;
    }
    if (solution && show_denominator && solution->shared)
        result["denominator"] = fc::to_decimal(solution->shared->denominator);
    else
        result["denominator"] = nullptr;
    doc["result"] = std::move(result);

    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out)
            throw fc::Error("cannot write \"" + cfg.out_path + "\"");
        out << doc.dump() << "\n";
        std::cout << text_output;
    } else {
        std::cout << doc.dump() << "\n";
    }
}

std::string solution_text(const fc::Solution& sol, bool show_denominator) {
    std::string out;
    for (std::size_t i = 0; i < sol.values.size(); ++i)
        out += "x" + std::to_string(i + 1) + " = " + fc::to_decimal(sol.values[i]) + "\n";
    if (show_denominator && sol.shared)
        out += "denominator = " + fc::to_decimal(sol.shared->denominator) + "\n";
    return out;
}

int cmd_solve(const RunConfig& cfg) {
    fc::Trace trace;
    std::optional<fc::Solution> solution;
    int code = 0;
    std::string message;
    const bool show_denominator = cfg.finish == Finish::Hart;
    try {
        fc::Tableau<fc::Integer> board = fc::parse_tableau(read_input(cfg.input));
        fc::detail::require_solvable_shape(board);
        if (cfg.finish == Finish::Hart && cfg.strategy == fc::PivotStrategy::FieldGauss)
            throw fc::ContractViolation(
                "the hart finish needs an integer echelon; use --strategy nine or chio");

        auto run = [&](const auto& t) {
            fc::Solution sol;
            if (cfg.finish == Finish::Jordan) {
                auto [diagonal, jtrace] = fc::gauss_jordan(t, cfg.strategy, cfg.policy);
                trace = std::move(jtrace);
                sol = fc::solution_from_diagonal(diagonal);
            } else {
                auto [echelon, ftrace] = fc::forward_eliminate(t, cfg.strategy, cfg.policy);
                trace = std::move(ftrace);
                if (cfg.finish == Finish::BackSub) {
                    sol = fc::back_substitute(echelon);
                } else {
                    if constexpr (std::is_same_v<std::decay_t<decltype(t)>,
                                                 fc::Tableau<fc::Integer>>) {
                        auto [diagonal, htrace] = fc::hart_backward(
                            echelon, fc::UpdateMode::Full, cfg.moderate_rows);
                        trace.append(std::move(htrace));
                        sol = fc::solution_from_diagonal(diagonal);
                    }
                }
            }
            return sol;
        };
        if (cfg.strategy == fc::PivotStrategy::FieldGauss)
            solution = run(fc::to_rational_tableau(board));
        else
            solution = run(board);
    } catch (const fc::Error& e) {
        code = exit_code_for(e);
        message = e.what();
        solution.reset();
    }

    std::string text = solution ? solution_text(*solution, show_denominator) : "";
    if (cfg.trace == TraceFormat::Json) {
        emit_json_document(cfg, trace, code, solution, show_denominator, text);
    } else {
        if (cfg.trace == TraceFormat::Board)
            std::cout << fc::render_trace_board(trace);
        std::cout << text;
    }
    if (code != 0)
        std::cerr << "error: " << message << "\n";
    return code;
}

int cmd_det(const RunConfig& cfg) {
    try {
        fc::Tableau<fc::Integer> board = fc::parse_tableau(read_input(cfg.input));
        if (board.cols() != board.rows())
            throw fc::DimensionMismatch("determinant needs a square tableau, got " +
                                        std::to_string(board.rows()) + "x" +
                                        std::to_string(board.cols()));
        fc::SquareMatrix a = fc::SquareMatrix::leading_block(board, board.rows());
        fc::Integer det;
        if (cfg.det_method == "chio")
            det = fc::det_via_chio(a, cfg.policy);
        else if (cfg.det_method == "cofactor")
            det = fc::det_oracle(a, fc::DetMethod::Cofactor);
        else
            det = fc::det_oracle(a, fc::DetMethod::Permutation);
        std::cout << fc::to_decimal(det) << "\n";
        return 0;
    } catch (const fc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

std::vector<fc::Integer> parse_coeff_list(const std::string& text) {
    std::vector<fc::Integer> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t begin = token.find_first_not_of(" \t");
        std::size_t end = token.find_last_not_of(" \t");
        if (begin == std::string::npos)
            throw fc::ParseError("empty coefficient in \"" + text + "\"", 1, 1);
        token = token.substr(begin, end - begin + 1);
        try {
            out.emplace_back(token);
        } catch (const std::exception&) {
            throw fc::ParseError("\"" + token + "\" is not an integer", 1, 1);
        }
    }
    return out;
}

int cmd_well(const RunConfig& cfg) {
    try {
        fc::WellSystem ws = fc::build_well_system(parse_coeff_list(cfg.coeffs));
        if (cfg.well_b)
            ws.set_rhs(fc::Integer(*cfg.well_b));
        fc::WellReport report = fc::solve_well(std::move(ws));
        std::cout << "b = " << fc::to_decimal(report.b_used) << "\n";
        std::cout << "pivot = " << fc::to_decimal(report.final_pivot) << "\n";
        if (cfg.well_solve)
            std::cout << solution_text(report.solution, false);
        return 0;
    } catch (const fc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

struct BenchCell {
    fc::OpTally ops;
    unsigned max_bits = 0;
};

int cmd_bench(const RunConfig& cfg) {
    const fc::PivotStrategy strategies[] = {fc::PivotStrategy::NineChapters,
                                            fc::PivotStrategy::Chio,
                                            fc::PivotStrategy::FieldGauss};
    BenchCell cells[3][2]; // strategy x {ge, gj}
    fc::DrawStats stats;

    for (int trial = 0; trial < cfg.trials; ++trial) {
        fc::SplitMix64 rng = fc::stream_for(cfg.seed, static_cast<std::uint64_t>(trial));
        fc::Tableau<fc::Integer> system =
            fc::random_strongly_nonsingular_system(rng, cfg.n, cfg.range, &stats);
        for (int s = 0; s < 3; ++s) {
            auto measure = [&](const auto& t) {
                fc::OpTally ge;
                auto [echelon, ftrace] = fc::forward_eliminate(t, strategies[s],
                                                               fc::PivotPolicy::Strict,
                                                               fc::UpdateMode::Full, &ge);
                fc::back_substitute(echelon, &ge);
                cells[s][0].ops += ge;
                cells[s][0].max_bits = std::max(cells[s][0].max_bits, fc::max_bit_measure(echelon));

                fc::OpTally gj;
                auto [diagonal, jtrace] = fc::gauss_jordan(t, strategies[s],
                                                           fc::PivotPolicy::Strict,
                                                           fc::UpdateMode::Full, &gj);
                fc::solution_from_diagonal(diagonal, &gj);
                cells[s][1].ops += gj;
                cells[s][1].max_bits = std::max(cells[s][1].max_bits, fc::max_bit_measure(diagonal));
            };
            if (strategies[s] == fc::PivotStrategy::FieldGauss)
                measure(fc::to_rational_tableau(system));
            else
                measure(system);
        }
    }

    auto ratio_str = [&](int s) {
        double ge = static_cast<double>(cells[s][0].ops.muldiv());
        double gj = static_cast<double>(cells[s][1].ops.muldiv());
        std::ostringstream os;
        os << std::fixed << std::setprecision(2) << (ge > 0 ? gj / ge : 0.0);
        return os.str();
    };

    if (cfg.format == "json") {
        ordered_json doc;
        doc["n"] = cfg.n;
        doc["trials"] = cfg.trials;
        doc["seed"] = cfg.seed;
        doc["range"] = cfg.range;
        doc["resamples"] = stats.resamples;
        ordered_json rows = ordered_json::array();
        for (int s = 0; s < 3; ++s)
            for (int p = 0; p < 2; ++p) {
                ordered_json row;
                row["strategy"] = fc::strategy_name(strategies[s]);
                row["pipeline"] = p == 0 ? "ge" : "gj";
                row["mul"] = cells[s][p].ops.mul;
                row["div"] = cells[s][p].ops.div;
                row["addsub"] = cells[s][p].ops.addsub();
                row["max_bits"] = cells[s][p].max_bits;
                rows.push_back(std::move(row));
            }
        doc["rows"] = std::move(rows);
        ordered_json ratios = ordered_json::array();
        for (int s = 0; s < 3; ++s)
            ratios.push_back({{"strategy", fc::strategy_name(strategies[s])},
                              {"gj_over_ge_muldiv", ratio_str(s)}});
        doc["ratios"] = std::move(ratios);
        std::cout << doc.dump() << "\n";
        return 0;
    }

    std::cout << "bench n=" << cfg.n << " trials=" << cfg.trials << " seed=" << cfg.seed
              << " range=" << cfg.range << " resamples=" << stats.resamples << "\n";
    std::cout << std::left << std::setw(9) << "strategy" << std::setw(9) << "pipeline"
              << std::right << std::setw(12) << "mul" << std::setw(12) << "div" << std::setw(12)
              << "addsub" << std::setw(10) << "max_bits" << "\n";
    for (int s = 0; s < 3; ++s)
        for (int p = 0; p < 2; ++p)
            std::cout << std::left << std::setw(9) << fc::strategy_name(strategies[s])
                      << std::setw(9) << (p == 0 ? "ge" : "gj") << std::right << std::setw(12)
                      << cells[s][p].ops.mul << std::setw(12) << cells[s][p].ops.div
                      << std::setw(12) << cells[s][p].ops.addsub() << std::setw(10)
                      << cells[s][p].max_bits << "\n";
    for (int s = 0; s < 3; ++s)
        std::cout << "ratio " << fc::strategy_name(strategies[s])
                  << " gj/ge muldiv = " << ratio_str(s) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"fangcheng: exact fraction-free linear algebra on counting-board tableaux"};
    app.require_subcommand(1);

    std::map<std::string, fc::PivotStrategy> strategy_map{
        {"nine", fc::PivotStrategy::NineChapters},
        {"chio", fc::PivotStrategy::Chio},
        {"field", fc::PivotStrategy::FieldGauss}};
    std::map<std::string, fc::PivotPolicy> policy_map{{"strict", fc::PivotPolicy::Strict},
                                                      {"swap", fc::PivotPolicy::Swap}};
    std::map<std::string, Finish> finish_map{{"backsub", Finish::BackSub},
                                             {"hart", Finish::Hart},
                                             {"jordan", Finish::Jordan}};
    std::map<std::string, TraceFormat> trace_map{{"none", TraceFormat::None},
                                                 {"board", TraceFormat::Board},
                                                 {"json", TraceFormat::Json}};

    CLI::App* solve = app.add_subcommand("solve", "solve a system from a tableau file");
    solve->add_option("file", cfg.input, "tableau file (\"-\" for stdin)")->required();
    solve->add_option("--strategy", cfg.strategy, "elimination divisor choice")
        ->transform(CLI::CheckedTransformer(strategy_map, CLI::ignore_case));
    solve->add_option("--pivot", cfg.policy, "zero-pivot handling")
        ->transform(CLI::CheckedTransformer(policy_map, CLI::ignore_case));
    solve->add_option("--finish", cfg.finish, "finishing phase")
        ->transform(CLI::CheckedTransformer(finish_map, CLI::ignore_case));
    solve->add_option("--trace", cfg.trace, "step trace format")
        ->transform(CLI::CheckedTransformer(trace_map, CLI::ignore_case));
    solve->add_option("--out", cfg.out_path, "write the JSON trace here instead of stdout");
    solve->add_flag("--moderate-rows", cfg.moderate_rows,
                    "divide rows by their gcd between backward steps (hart)");

    CLI::App* det = app.add_subcommand("det", "determinant of a square tableau");
    det->add_option("file", cfg.input, "tableau file (\"-\" for stdin)")->required();
    det->add_option("--method", cfg.det_method, "chio, cofactor, or perm")
        ->check(CLI::IsMember({"chio", "cofactor", "perm"}));
    det->add_option("--pivot", cfg.policy, "zero-pivot handling (chio method)")
        ->transform(CLI::CheckedTransformer(policy_map, CLI::ignore_case));

    CLI::App* well = app.add_subcommand("well", "the cyclic band family with uniform rhs");
    well->add_option("--coeffs", cfg.coeffs, "comma-separated diagonal coefficients")
        ->required();
    well->add_option("--b", cfg.well_b, "given right-hand side (default: posit b = det(A))");
    well->add_flag("--solve", cfg.well_solve, "also print the exact solution");

    CLI::App* bench = app.add_subcommand("bench", "operation counts and entry growth");
    bench->add_option("--n", cfg.n, "system size")->check(CLI::Range(2, 64));
    bench->add_option("--trials", cfg.trials, "trial count")->check(CLI::PositiveNumber);
    bench->add_option("--seed", cfg.seed, "seed (trial r derives its own stream)");
    bench->add_option("--range", cfg.range, "entries drawn from [-range, range]")
        ->check(CLI::PositiveNumber);
    bench->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (solve->parsed())
        return cmd_solve(cfg);
    if (det->parsed())
        return cmd_det(cfg);
    if (well->parsed())
        return cmd_well(cfg);
    return cmd_bench(cfg);
}
