// semires: residuation and two-sided solves over max-plus / max-min semirings.
//
//   semires residuate PROBLEM.json [--out FILE] [--semiring maxplus|maxmin]
//   semires solve     PROBLEM.json [--max-iter N] [--x0 FILE] [--trace] [--out FILE] [--semiring ...]
//   semires check     PROBLEM.json [--out FILE] [--semiring ...]
//
// Exit codes: 0 success, 2 parse error, 3 dimension error, 4 overflow.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "semires/cli.hpp"

namespace {

using semires::cli::json;

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw semires::ParseError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw semires::ParseError(path + ": " + e.what());
    }
}

void write_result(const json& result, const std::string& out_path)
{
    const std::string text = result.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw semires::ParseError("cannot write '" + out_path + "'");
    }
    out << text;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Residuation and two-sided max-linear solves over idempotent semirings"};
    app.require_subcommand(1);

    std::string problem_path;
    std::string out_path;
    std::string semiring;
    std::size_t max_iter = 0;
    std::string x0_path;
    bool trace = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("problem", problem_path, "Problem file (JSON)")->required();
        cmd->add_option("--out", out_path, "Write the result here instead of stdout");
        cmd->add_option("--semiring", semiring, "Override the problem's semiring")
            ->check(CLI::IsMember({"maxplus", "maxmin"}));
    };

    auto* residuate = app.add_subcommand("residuate", "Greatest subsolution X = A\\B");
    add_common(residuate);
    auto* solve = app.add_subcommand("solve", "Fixed-point solve of A x = B y");
    add_common(solve);
    solve->add_option("--max-iter", max_iter, "Iteration limit")->check(CLI::PositiveNumber);
    solve->add_option("--x0", x0_path, "Initial vector: a JSON array, or an object with an 'x0' field");
    solve->add_flag("--trace", trace, "Include every iterate in the result");
    auto* check = app.add_subcommand("check", "Verify a candidate pair (x, y)");
    add_common(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : semires::cli::ParseFailure;
    }

    try {
        std::optional<semires::SemiringTag> tag;
        if (!semiring.empty()) {
            tag = semires::parse_tag(semiring);
        }
        semires::cli::Problem problem = semires::cli::parse_problem(read_json(problem_path), tag);

        json result;
        if (*residuate) {
            result = semires::cli::run_residuate(problem);
        } else if (*solve) {
            if (max_iter > 0) {
                problem.max_iter = max_iter;
            }
            if (trace) {
                problem.trace = true;
            }
            if (!x0_path.empty()) {
                json x0 = read_json(x0_path);
                if (x0.is_object()) {
                    x0 = x0.at("x0");
                }
                problem.x0 = semires::cli::vector_from_json(problem.semiring, problem.kind, x0);
            }
            result = semires::cli::run_solve(problem);
        } else {
            result = semires::cli::run_check(problem);
        }
        write_result(result, out_path);
    } catch (const std::exception& e) {
        std::cerr << "semires: " << e.what() << "\n";
        return semires::cli::exit_code_for(e);
    }
    return semires::cli::Success;
}
