#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfc/classify.hpp"

namespace gfc::io {

using Json = nlohmann::ordered_json;

// Machine-readable command output. Rational values are always emitted as
// "p/q" strings, never as floats; integer counters (orders, indices,
// timings) are plain JSON integers. Documents round-trip losslessly through
// parse/serialize.
struct ResultDoc {
    Json doc;

    static ResultDoc parse(const std::string& text);
    std::string serialize() const;  // stable 2-space indentation + trailing newline

    friend bool operator==(const ResultDoc& a, const ResultDoc& b) = default;
};

// Spec file schema (see docs/FORMATS.md):
//   {
//     "order": N,
//     "alpha": {"kind":"list","values":["1","1","1/2",...]}            (N+1 values)
//            | {"kind":"family","family":"exp|hermite|chebyshev1|
//               ultraspherical|binomial|log","params":{...}},
//     "r": {"kind":"list","values":["0","1",...],
//           "convention":"paper_Rn_over_n"}
//   }
// The r values are R_1..R_N of R(t) = sum R_n t^n/n; the mandatory
// convention tag guards against silent misreads of that normalization.
// Lists shorter than N are zero-extended (R is then the stated polynomial);
// alpha lists must carry exactly N+1 values.
GenFunSpec spec_from_json(const Json& j);
Json spec_to_json(const GenFunSpec& spec);
GenFunSpec load_spec_file(const std::filesystem::path& path);

ResultDoc expand_result(const GenFunSpec& spec, const PolySeq& ps);
ResultDoc classify_result(const GenFunSpec& spec, const ClassifyOutcome& outcome);
ResultDoc verify_result(const GenFunSpec& spec,
                        const std::vector<std::string>& requested,
                        const std::map<std::string, CheckResult>& results);
ResultDoc scan_result(const GenFunSpec& spec, const std::string& knob,
                      const std::vector<ScanRow>& rows);

struct BenchRow {
    int order = 0;
    int rep = 0;
    long long micros = 0;
    std::string hash;
};
ResultDoc bench_result(const std::vector<BenchRow>& rows);

// CSV emission (RFC 4180, LF line ends). Rational cells are "p/q" strings;
// decimal_digits >= 0 appends companion columns suffixed "_approx" holding
// rounded decimal approximations.
std::string classify_csv(const GenFunSpec& spec, const ClassifyOutcome& outcome,
                         int decimal_digits = -1);
std::string scan_csv(const std::vector<ScanRow>& rows, int decimal_digits = -1);
std::string bench_csv(const std::vector<BenchRow>& rows);

// Decimal approximation of r with `digits` digits after the point, rounded
// half away from zero. For human skimming only; never parsed back.
std::string decimal_approx(const Rational& r, int digits);

// Writes through a temp file in the target directory followed by a rename,
// so readers never observe a partially written artifact.
void write_atomic(const std::filesystem::path& path, const std::string& content);

// 64-bit FNV-1a over the coefficient strings of a polynomial sequence;
// stable across runs, used by the bench determinism check.
std::string polyseq_hash(const PolySeq& ps);

}  // namespace gfc::io
