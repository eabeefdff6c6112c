// pw: build and check explicit witnesses that a trace-zero matrix lies in
// the image of a multilinear polynomial.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pw/constructor.hpp"
#include "pw/errors.hpp"
#include "pw/pc_poly.hpp"
#include "pw/poly_parse.hpp"
#include "pw/random.hpp"
#include "pw/serialize.hpp"
#include "pw/verify.hpp"
#include "selftest.hpp"

namespace {

enum ExitCode : int { kOk = 0, kVerifyFailed = 2, kInputError = 3, kInvariant = 4 };

struct PolySource {
    std::string text;
    std::string file;

    pw::MultilinearPoly load() const {
        if (!text.empty() && !file.empty()) throw pw::InputError("give only one of --poly-str and --poly");
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw pw::InputError("cannot open '" + file + "'");
            std::stringstream ss;
            ss << in.rdbuf();
            return pw::parse_poly(ss.str());
        }
        if (text.empty()) throw pw::InputError("a polynomial is required (--poly-str or --poly)");
        return pw::parse_poly(text);
    }
};

void add_poly_options(CLI::App* cmd, PolySource& src) {
    cmd->add_option("--poly-str", src.text, "polynomial text, e.g. \"X1*X2 - X2*X1\"");
    cmd->add_option("--poly", src.file, "file containing the polynomial text");
}

void emit(const pw::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw pw::InputError("cannot write '" + out_path + "'");
    out << j.dump(2) << "\n";
}

pw::MultilinearPoly require_nonzero(pw::MultilinearPoly f) {
    if (f.is_zero()) std::cerr << "warning: polynomial is zero after combining like terms\n";
    return f;
}

int cmd_witness(const PolySource& src, const std::string& target_path, const std::string& out_path,
                const std::string& report_path, bool no_verify) {
    const auto f = require_nonzero(src.load());
    const auto a = pw::matrix_from_json(pw::read_json_file(target_path));
    const auto start = std::chrono::steady_clock::now();
    const auto w = pw::witness_for_multilinear(f, a);
    const bool verified = no_verify ? false : pw::verify(f, w.assignment, a);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    emit(pw::witness_to_json(w.assignment, a, verified, w.trace), out_path);

    pw::RunReport report{f.to_string(), a.size(), w.size(), pw::size_bound(a.size(), w.trace),
                         verified, ms, w.trace, "Q"};
    const auto rj = pw::report_to_json(report);
    if (!report_path.empty()) {
        emit(rj, report_path);
    } else if (!out_path.empty()) {
        std::cout << rj.dump(2) << "\n";
    } else {
        std::cerr << rj.dump() << "\n";
    }
    if (no_verify) return kOk;
    return verified ? kOk : kVerifyFailed;
}

int cmd_verify(const PolySource& src, const std::string& witness_path, const std::string& target_path) {
    const auto f = src.load();
    const auto doc = pw::witness_from_json(pw::read_json_file(witness_path));
    std::optional<pw::QMatrix> target = doc.target;
    if (!target_path.empty()) target = pw::matrix_from_json(pw::read_json_file(target_path));
    if (!target) throw pw::InputError("no target: pass --target or include \"target\" in the witness");
    const bool ok = pw::verify(f, doc.assignment, *target);
    std::cout << pw::json{{"verified", ok}, {"s", doc.assignment.size()}}.dump() << "\n";
    return ok ? kOk : kVerifyFailed;
}

int cmd_hollow(const std::string& matrix_path) {
    const auto a = pw::matrix_from_json(pw::read_json_file(matrix_path));
    const auto [p, h] = pw::hollow_similarity(a);
    std::cout << pw::json{{"p", pw::matrix_to_json(p)}, {"h", pw::matrix_to_json(h)}}.dump(2) << "\n";
    return kOk;
}

int cmd_partitions(int n, const std::vector<int>& omega) {
    const auto parts = pw::enumerate_partitions(pw::OmegaSet(omega), n);
    std::cout << pw::partitions_to_json(parts).dump() << "\n";
    return kOk;
}

int cmd_expand(const std::string& path) {
    const auto f = pw::admissible_from_json(pw::read_json_file(path));
    const auto p = pw::expand_admissible(f);
    std::cout << pw::json{{"n", f.arity()},
                          {"omega", f.omega().elements()},
                          {"terms", pw::pcpoly_to_json(p)}}
                     .dump(2)
              << "\n";
    return kOk;
}

int cmd_reduce(const PolySource& src) {
    const auto f = src.load();
    const auto step = pw::reduce_step(pw::from_multilinear(f));
    std::cout << pw::reduction_to_json(step).dump(2) << "\n";
    return kOk;
}

int cmd_selftest(std::size_t cases, std::optional<std::uint64_t> seed_flag, unsigned jobs) {
    const auto seed = pw::resolve_seed(seed_flag);
    const auto results = pw::tools::run_selftest(cases, seed, jobs);
    std::cout << "seed " << seed << "\n";
    std::cout << std::left << std::setw(30) << "suite" << std::right << std::setw(8) << "cases"
              << std::setw(8) << "passed" << std::setw(12) << "invariant" << std::setw(12) << "ms" << "\n";
    bool all_ok = true;
    bool invariant = false;
    for (const auto& r : results) {
        std::cout << std::left << std::setw(30) << r.name << std::right << std::setw(8) << r.cases
                  << std::setw(8) << r.passed << std::setw(12) << r.invariant_failures << std::setw(12)
                  << std::fixed << std::setprecision(1) << r.millis << "\n";
        if (!r.first_failure.empty()) std::cout << "  first failure: " << r.first_failure << "\n";
        all_ok = all_ok && r.passed == r.cases;
        invariant = invariant || r.invariant_failures > 0;
    }
    if (invariant) return kInvariant;
    return all_ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pw: explicit witnesses for trace-zero matrices in images of multilinear polynomials"};
    app.require_subcommand(1);

    PolySource witness_src;
    std::string witness_target, witness_out, witness_report;
    bool no_verify = false;
    auto* witness = app.add_subcommand("witness", "construct and verify a witness");
    add_poly_options(witness, witness_src);
    witness->add_option("--target", witness_target, "target matrix JSON")->required();
    witness->add_option("--out", witness_out, "write the witness JSON here instead of stdout");
    witness->add_option("--report", witness_report, "write the run report JSON here");
    witness->add_flag("--no-verify", no_verify, "skip the independent re-evaluation");

    PolySource verify_src;
    std::string verify_witness, verify_target;
    auto* verify = app.add_subcommand("verify", "check a witness file by direct evaluation");
    add_poly_options(verify, verify_src);
    verify->add_option("--witness", verify_witness, "witness JSON")->required();
    verify->add_option("--target", verify_target, "target matrix JSON (defaults to the witness's target)");

    std::string hollow_matrix;
    auto* hollow = app.add_subcommand("hollow", "conjugate a trace-zero matrix to a hollow one");
    hollow->add_option("--matrix", hollow_matrix, "matrix JSON")->required();

    int part_n = 1;
    std::vector<int> part_omega;
    auto* partitions = app.add_subcommand("partitions", "list all partitions of omega into n parts");
    partitions->add_option("--n", part_n, "number of parts")->required()->check(CLI::PositiveNumber);
    partitions->add_option("--omega", part_omega, "comma-separated indices")->delimiter(',');

    std::string expand_file;
    auto* expand = app.add_subcommand("expand", "multiply out an admissible polynomial");
    expand->add_option("--admissible", expand_file, "admissible polynomial JSON")->required();

    PolySource reduce_src;
    auto* reduce = app.add_subcommand("reduce", "show one reduction step");
    add_poly_options(reduce, reduce_src);

    std::size_t cases = 100;
    std::optional<std::uint64_t> seed;
    unsigned jobs = 1;
    auto* selftest = app.add_subcommand("selftest", "run the randomized property suites");
    selftest->add_option("--cases", cases, "cases per suite");
    selftest->add_option("--seed", seed, "seed (overrides PW_SEED)");
    selftest->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*witness) return cmd_witness(witness_src, witness_target, witness_out, witness_report, no_verify);
        if (*verify) return cmd_verify(verify_src, verify_witness, verify_target);
        if (*hollow) return cmd_hollow(hollow_matrix);
        if (*partitions) return cmd_partitions(part_n, part_omega);
        if (*expand) return cmd_expand(expand_file);
        if (*reduce) return cmd_reduce(reduce_src);
        if (*selftest) return cmd_selftest(cases, seed, jobs);
    } catch (const pw::InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kInvariant;
    } catch (const pw::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
