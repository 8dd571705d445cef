// Command line front end: verify a generator matrix, fuzz the
// identity/discriminant equivalences, or export solved tables.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <codeloop/codeloop.hpp>

namespace {

using namespace codeloop;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::write_error, "cannot open " + path);
    out << text;
    if (!out.flush()) fail(Errc::write_error, "cannot write " + path);
}

int exit_code_for(const Error& err) {
    switch (err.code()) {
        case Errc::file_not_found:
        case Errc::parse_error:
        case Errc::write_error:
            return exit_usage;
        case Errc::inconsistent_system:
            return exit_inconsistent;
        default:
            return exit_bad_input;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"code loop construction and identity checks for doubly even binary codes"};
    app.require_subcommand(1);

    std::string matrix_path;
    std::string out_path;
    std::string what = "table";
    FuzzConfig fuzz;

    CLI::App* verify = app.add_subcommand("verify", "run the full check suite on a generator matrix");
    verify->add_option("matrix", matrix_path, "generator matrix file, one row per line")->required();
    verify->add_option("-o,--output", out_path, "write the report to a file instead of stdout");

    CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "random codes and tables vs the equivalence catalog");
    fuzz_cmd->add_option("--dim", fuzz.dim, "code dimension (1..3)")->capture_default_str();
    fuzz_cmd->add_option("--len", fuzz.len, "code length (4..64)")->capture_default_str();
    fuzz_cmd->add_option("--count", fuzz.count, "iterations")->capture_default_str();
    fuzz_cmd->add_option("--seed", fuzz.seed, "random seed")->capture_default_str();
    fuzz_cmd->add_option("-o,--output", out_path, "write the summary to a file instead of stdout");

    CLI::App* export_cmd = app.add_subcommand("export", "solve a table and export it or the loop it builds");
    export_cmd->add_option("matrix", matrix_path, "generator matrix file, one row per line")->required();
    export_cmd->add_option("--what", what, "table (Cayley table) or phi (solved two-variable table)")
        ->check(CLI::IsMember({"table", "phi"}))
        ->capture_default_str();
    export_cmd->add_option("-o,--output", out_path, "write to a file instead of stdout")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int cli_status = app.exit(e);
        return cli_status == 0 ? exit_ok : exit_usage;
    }

    try {
        if (verify->parsed()) {
            VerifyResult result = run_verify(matrix_path);
            write_output(result.report, out_path);
            return result.exit_code;
        }
        if (fuzz_cmd->parsed()) {
            FuzzResult result = run_fuzz(fuzz);
            write_output(result.summary + result.dump, out_path);
            return result.exit_code;
        }
        ExportResult result = run_export(matrix_path, what == "phi" ? ExportKind::phi : ExportKind::table);
        if (result.exit_code != exit_ok) {
            std::cerr << result.payload;
            return result.exit_code;
        }
        write_output(result.payload, out_path);
        return exit_ok;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_code_for(err);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_usage;
    }
}
