#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gfc/families.hpp"
#include "gfc/recurrence.hpp"

namespace gfc {

enum class Verdict { Monomial, Ultraspherical, Chebyshev1, Hermite, NotTTRR, OutsideHypotheses };

std::string_view verdict_name(Verdict v);

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string_view check_status_name(CheckStatus s);

struct CheckWitness {
    std::string check;  // "ttrr", "gf7", "gf9", "gf10", "gf11", "gf12",
                        // "symmetry", "solricati", "r_quadratic", "rescale", "alphan"
    int n = -1;         // offending index
    int k = -1;         // second index (gf12 only)
    Poly residual;      // nonzero residual; scalar mismatches as degree-0 polys
};

// Exact-arithmetic identity checks bundled with a classification. Every flag
// is decided with zero tolerance; NotApplicable marks checks whose index
// range is empty or whose defining sequences do not exist (a_n needs
// alpha_1 R_2 != 0). Witnesses carry the first offending index per failed
// check. Checks at indices that would touch coefficients beyond the
// truncation are skipped, never zero-padded.
struct CertificateBundle {
    int ttrr_valid_to = -1;
    CheckStatus gf7_ok = CheckStatus::NotApplicable;
    CheckStatus gf9_ok = CheckStatus::NotApplicable;
    CheckStatus gf10_ok = CheckStatus::NotApplicable;
    CheckStatus gf11_ok = CheckStatus::NotApplicable;
    CheckStatus gf12_ok = CheckStatus::NotApplicable;
    CheckStatus symmetry_ok = CheckStatus::NotApplicable;
    CheckStatus solricati_ok = CheckStatus::NotApplicable;
    CheckStatus r_quadratic_ok = CheckStatus::NotApplicable;
    CheckStatus rescale_ok = CheckStatus::NotApplicable;
    std::vector<CheckWitness> witnesses;

    bool fully_green() const;  // no Fail anywhere
};

struct Classification {
    Verdict verdict = Verdict::OutsideHypotheses;
    std::optional<FamilyParams> params;
    CertificateBundle certificate;
    std::string diagnostic;                   // explanation for non-family verdicts
    std::optional<TtrrFailure> ttrr_failure;  // witness when verdict == NotTTRR
};

// Decides which classification case holds for the spec and recovers the
// parameters:
//   - TTRR extraction fails        -> NotTTRR with the failure witness
//   - R == 0                       -> Monomial
//   - alpha_1 R_2 != 0, quadratic R -> Ultraspherical / Chebyshev1 / Hermite
//     via lambda1 = 4 a2/a1 - 3 a3/a2, lambda2 = 3 a3/a2 - 2 a2/a1 (a = alpha),
//     with the whole alpha chain checked against the one-step product rule
//   - hypothesis violations        -> OutsideHypotheses with diagnostics
// Pre: order >= 7 (below that the certificate is mostly vacuous).
Classification classify(const GenFunSpec& spec);

// Classification plus the intermediate data (expansion, recurrence) so
// callers can report per-n tables without recomputing.
struct ClassifyOutcome {
    Classification cls;
    std::optional<PolySeq> ps;
    std::optional<Recurrence> rec;
};

ClassifyOutcome classify_detailed(const GenFunSpec& spec);

// Evaluates the full certificate. Pre: the TTRR holds (use classify for
// inputs that may fail it). The hint selects the reference family for the
// rescaling check; without it rescale_ok is NotApplicable.
CertificateBundle run_certificate(const GenFunSpec& spec,
                                  const std::optional<FamilyParams>& hint = {});
CertificateBundle run_certificate(const GenFunSpec& spec, const PolySeq& ps,
                                  const Recurrence& rec,
                                  const std::optional<FamilyParams>& hint);

// Both sides of the two nontrivial recurrence identities, exposed so the
// evaluators can be pinned against independently computed values.
//   gf11 (n >= 3):
//     lhs = 4 T_2/T_1^3 (1 - ((n-3)/(n-2)) a_{n-3}/a_n)
//     rhs = (n+1)/a_n - 2n/a_{n-1} + (n-1)/a_{n-2}
//   gf12 (k >= 2, n >= 2k+1):
//     lhs = (2/T_1)(a_n - ((n-2k-1)/(n-2k)) a_{n-2k-1}) T_{k+1}
//           + (((n+2)/n) c_n - ((n-2k+1)/(n-2k+2)) c_{n-2k+1}) T_k
//     rhs = sum_{l=1}^{k} T_l T_{k-l+1} / (n - 2k + 2l)
std::pair<Rational, Rational> gf11_sides(const DerivedSequences& ds, int n);
std::pair<Rational, Rational> gf12_sides(const DerivedSequences& ds, int k, int n);

// Per-check evaluation used by the verify command. Valid names are listed in
// kVerifyChecks; recurrence-dependent checks fail with a "ttrr" witness when
// the TTRR itself does not hold.
struct CheckResult {
    CheckStatus status = CheckStatus::NotApplicable;
    std::vector<CheckWitness> witnesses;
};

inline constexpr std::array<std::string_view, 7> kVerifyChecks = {
    "gf7", "gf9", "gf10", "gf11", "gf12", "solricati", "symmetry"};

std::map<std::string, CheckResult> evaluate_checks(const GenFunSpec& spec,
                                                   const std::vector<std::string>& names);

// Perturbation scan: re-classifies the base spec with one R coefficient
// replaced (R knob) or one alpha coefficient multiplied (alpha knob) by each
// value in turn. Pre: the base spec classifies as one of the four families.
struct ScanKnob {
    enum class Target { R, Alpha };
    Target target = Target::R;
    int index = 0;
};

struct ScanRow {
    Rational value;
    Verdict verdict;
    std::optional<int> first_failure_n;
};

std::vector<ScanRow> scan_perturbations(const GenFunSpec& base, const ScanKnob& knob,
                                        const std::vector<Rational>& values);

}  // namespace gfc
