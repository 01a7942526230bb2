// gfc — expand generating-function specs into monic polynomial sets, extract
// recurrences, verify the identity suite, and classify per family.
//
// Exit codes are a stable contract:
//   0  success (a "not_ttrr" classification is a valid answer, not an error)
//   2  parse/validation error in the input file
//   3  precondition violation (zero alpha, order too small, order cap)
//   4  a requested verification check failed, or bench determinism broke

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gfc/io.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCheckFailed = 4;
constexpr int kDefaultMaxOrder = 256;

int max_order_cap() {
    const char* env = std::getenv("GFC_MAX_ORDER");
    if (!env || !*env) return kDefaultMaxOrder;
    try {
        size_t pos = 0;
        int cap = std::stoi(env, &pos);
        if (pos != std::string(env).size() || cap < 1) throw std::invalid_argument(env);
        return cap;
    } catch (const std::exception&) {
        throw gfc::Error(std::string("GFC_MAX_ORDER must be a positive integer, got \"") + env +
                         "\"");
    }
}

void enforce_order_cap(int order) {
    int cap = max_order_cap();
    if (order > cap)
        throw gfc::OrderTooSmall("order " + std::to_string(order) +
                                 " exceeds GFC_MAX_ORDER = " + std::to_string(cap));
}

// stdout by default, atomic file write with --out.
void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        gfc::io::write_atomic(out_path, content);
}

gfc::GenFunSpec load_spec(const std::string& path, int order_override) {
    gfc::GenFunSpec spec = gfc::io::load_spec_file(path);
    if (order_override > 0 && order_override != spec.order()) {
        const int N = order_override;
        std::vector<gfc::Rational> alpha = spec.alpha_list();
        std::vector<gfc::Rational> r = spec.r_list();
        if (N > spec.order())
            throw gfc::InvalidSpec(
                "--order may only lower the order of a list-based spec (raise the order in "
                "the file itself; family alphas regenerate from it)");
        alpha.resize(static_cast<size_t>(N) + 1);
        r.resize(static_cast<size_t>(N));
        spec = gfc::GenFunSpec(std::move(alpha), std::move(r));
    }
    enforce_order_cap(spec.order());
    return spec;
}

std::vector<gfc::Rational> parse_values(const std::string& csv) {
    std::vector<gfc::Rational> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (item == "double")  // convenience alias for the multiplier 2
            out.push_back(gfc::Rational(2));
        else
            out.push_back(gfc::Rational::parse(item));
    }
    if (out.empty()) throw gfc::Error("--values must list at least one rational");
    return out;
}

gfc::ScanKnob parse_knob(const std::string& text) {
    gfc::ScanKnob knob;
    std::string digits;
    if (text.rfind("alpha", 0) == 0) {
        knob.target = gfc::ScanKnob::Target::Alpha;
        digits = text.substr(5);
    } else if (text.rfind("r", 0) == 0) {
        knob.target = gfc::ScanKnob::Target::R;
        digits = text.substr(1);
    } else {
        throw gfc::Error("knob must look like r3, r4 or alpha5");
    }
    try {
        size_t pos = 0;
        knob.index = std::stoi(digits, &pos);
        if (pos != digits.size()) throw std::invalid_argument(digits);
    } catch (const std::exception&) {
        throw gfc::Error("knob must look like r3, r4 or alpha5");
    }
    return knob;
}

int run_expand(const std::string& spec_path, int order, const std::string& out_path) {
    gfc::GenFunSpec spec = load_spec(spec_path, order);
    gfc::PolySeq ps = gfc::expand(spec);
    emit(out_path, gfc::io::expand_result(spec, ps).serialize());
    return 0;
}

int run_classify(const std::string& spec_path, bool csv, int decimal,
                 const std::string& out_path) {
    gfc::GenFunSpec spec = load_spec(spec_path, -1);
    gfc::ClassifyOutcome outcome = gfc::classify_detailed(spec);
    if (csv) {
        emit(out_path, gfc::io::classify_csv(spec, outcome, decimal));
        std::cerr << "verdict: " << gfc::verdict_name(outcome.cls.verdict) << "\n";
    } else {
        emit(out_path, gfc::io::classify_result(spec, outcome).serialize());
    }
    return 0;
}

int run_verify(const std::string& spec_path, const std::string& checks_csv,
               const std::string& out_path) {
    gfc::GenFunSpec spec = load_spec(spec_path, -1);
    std::vector<std::string> requested;
    if (checks_csv.empty()) {
        requested.assign(gfc::kVerifyChecks.begin(), gfc::kVerifyChecks.end());
    } else {
        std::string item;
        std::istringstream in(checks_csv);
        while (std::getline(in, item, ',')) requested.push_back(item);
    }
    auto results = gfc::evaluate_checks(spec, requested);
    emit(out_path, gfc::io::verify_result(spec, requested, results).serialize());
    for (const auto& name : requested)
        if (results.at(name).status == gfc::CheckStatus::Fail) {
            std::cerr << "check failed: " << name << "\n";
            return kExitCheckFailed;
        }
    return 0;
}

int run_scan(const std::string& spec_path, const std::string& knob_text,
             const std::string& values_csv, const std::string& csv_path,
             const std::string& out_path, int decimal) {
    gfc::GenFunSpec spec = load_spec(spec_path, -1);
    gfc::ScanKnob knob = parse_knob(knob_text);
    std::vector<gfc::Rational> values = parse_values(values_csv);
    std::vector<gfc::ScanRow> rows = gfc::scan_perturbations(spec, knob, values);
    if (!csv_path.empty()) gfc::io::write_atomic(csv_path, gfc::io::scan_csv(rows, decimal));
    if (csv_path.empty() || !out_path.empty())
        emit(out_path, gfc::io::scan_result(spec, knob_text, rows).serialize());
    return 0;
}

int run_bench(int order, int reps, const std::string& out_path, bool json) {
    enforce_order_cap(order);
    if (reps < 1) throw gfc::Error("--reps must be >= 1");

    // Deterministic stress input: every alpha_n nonzero, dense R so the
    // composition has full work to do.
    auto bench_spec = [](int N) {
        std::vector<gfc::Rational> alpha, r;
        alpha.reserve(static_cast<size_t>(N) + 1);
        for (int n = 0; n <= N; ++n) alpha.push_back(gfc::Rational(1, n + 1));
        alpha[0] = gfc::Rational(1);
        r.assign(static_cast<size_t>(N), gfc::Rational(0));
        for (int n = 2; n <= N; ++n) r[static_cast<size_t>(n - 1)] = gfc::Rational(1, n + 1);
        return gfc::GenFunSpec(std::move(alpha), std::move(r));
    };

    std::vector<gfc::io::BenchRow> rows;
    for (int ord : {std::max(order / 4, 1), std::max(order / 2, 1), order}) {
        gfc::GenFunSpec spec = bench_spec(ord);
        std::string first_hash;
        for (int rep = 0; rep < reps; ++rep) {
            auto start = std::chrono::steady_clock::now();
            gfc::PolySeq ps = gfc::expand(spec);
            auto stop = std::chrono::steady_clock::now();
            gfc::io::BenchRow row;
            row.order = ord;
            row.rep = rep;
            row.micros =
                std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
            row.hash = gfc::io::polyseq_hash(ps);
            if (rep == 0)
                first_hash = row.hash;
            else if (row.hash != first_hash) {
                std::cerr << "bench: nondeterministic expansion at order " << ord << "\n";
                return kExitCheckFailed;
            }
            rows.push_back(std::move(row));
        }
    }
    emit(out_path, json ? gfc::io::bench_result(rows).serialize() : gfc::io::bench_csv(rows));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generating-function polynomial classifier"};
    app.require_subcommand(1);

    std::string spec_path, out_path, checks_csv, knob_text, values_csv, csv_path;
    int order = -1, decimal = -1;
    int bench_order = 32, bench_reps = 3;
    bool as_csv = false, as_json = false;

    auto* cmd_expand = app.add_subcommand("expand", "expand a spec into P_0..P_N");
    cmd_expand->add_option("spec", spec_path, "spec JSON file")->required();
    cmd_expand->add_option("--order", order, "truncate the spec to this order");
    cmd_expand->add_option("--out", out_path, "write the result here (atomic)");

    auto* cmd_classify = app.add_subcommand("classify", "classify a spec and certify it");
    cmd_classify->add_option("spec", spec_path, "spec JSON file")->required();
    cmd_classify->add_flag("--csv", as_csv, "emit the per-n table as CSV instead of JSON");
    cmd_classify->add_option("--decimal", decimal, "append *_approx decimal columns (CSV)");
    cmd_classify->add_option("--out", out_path, "write the result here (atomic)");

    auto* cmd_verify = app.add_subcommand("verify", "run identity checks");
    cmd_verify->add_option("spec", spec_path, "spec JSON file")->required();
    cmd_verify->add_option("--checks", checks_csv,
                           "comma list from gf7,gf9,gf10,gf11,gf12,solricati,symmetry "
                           "(default: all)");
    cmd_verify->add_option("--out", out_path, "write the result here (atomic)");

    auto* cmd_scan = app.add_subcommand("scan", "perturb one coefficient and re-classify");
    cmd_scan->add_option("spec", spec_path, "spec JSON file")->required();
    cmd_scan->add_option("--knob", knob_text, "r<N> (replace R_N) or alpha<N> (scale alpha_N)")
        ->required();
    cmd_scan->add_option("--values", values_csv, "comma list of rationals")->required();
    cmd_scan->add_option("--csv", csv_path, "write the scan table as CSV here");
    cmd_scan->add_option("--decimal", decimal, "append *_approx decimal columns (CSV)");
    cmd_scan->add_option("--out", out_path, "write the JSON result here (atomic)");

    auto* cmd_bench = app.add_subcommand("bench", "time expansion at orders N/4, N/2, N");
    cmd_bench->add_option("--order", bench_order, "largest order to time");
    cmd_bench->add_option("--reps", bench_reps, "repetitions per order");
    cmd_bench->add_flag("--json", as_json, "emit JSON instead of CSV");
    cmd_bench->add_option("--out", out_path, "write the result here (atomic)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(cmd_expand)) return run_expand(spec_path, order, out_path);
        if (app.got_subcommand(cmd_classify))
            return run_classify(spec_path, as_csv, decimal, out_path);
        if (app.got_subcommand(cmd_verify)) return run_verify(spec_path, checks_csv, out_path);
        if (app.got_subcommand(cmd_scan))
            return run_scan(spec_path, knob_text, values_csv, csv_path, out_path, decimal);
        if (app.got_subcommand(cmd_bench))
            return run_bench(bench_order, bench_reps, out_path, as_json);
    } catch (const gfc::ZeroAlpha& e) {
        std::cerr << "error: " << e.what() << " (n = " << e.n << ")\n";
        return kExitPrecondition;
    } catch (const gfc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const gfc::InvalidSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const gfc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
