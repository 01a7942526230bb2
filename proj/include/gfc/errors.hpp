#pragma once

#include <stdexcept>
#include <string>

namespace gfc {

// Base class for every error this library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input: rational strings, spec files, result documents.
struct ParseError : Error {
    using Error::Error;
};

// A spec file (or programmatic spec) violates a structural invariant:
// wrong sequence lengths, alpha_0 != 1, R_1 != 0, bad convention tag.
struct InvalidSpec : Error {
    using Error::Error;
};

// Construction of a rational with denominator zero, or division by zero.
struct ZeroDenominator : Error {
    using Error::Error;
};

// Composition F(u) requires u to have no constant term in t.
struct NonzeroConstantTerm : Error {
    using Error::Error;
};

// alpha_n == 0 inside the working range: the monic polynomial of degree n
// cannot be extracted.
struct ZeroAlpha : Error {
    int n;
    explicit ZeroAlpha(int n_)
        : Error("alpha_" + std::to_string(n_) + " is zero; monic extraction at degree " +
                std::to_string(n_) + " is impossible"),
          n(n_) {}
};

// An operation was asked to look past the truncation order it was given.
struct OrderExceeded : Error {
    using Error::Error;
};

// The input is too shallow for the requested operation.
struct OrderTooSmall : Error {
    using Error::Error;
};

// Family parameters that violate the admissibility rules.
struct InvalidParams : Error {
    using Error::Error;
};

// The closed-form omega formula has a vanishing denominator at this index;
// callers fall back to the telescoped difference form.
struct SingularIndex : Error {
    int n;
    explicit SingularIndex(int n_)
        : Error("omega formula denominator vanishes at n = " + std::to_string(n_)), n(n_) {}
};

// A rescaling comparison was attempted on a sequence with mixed parity.
struct ParityViolation : Error {
    using Error::Error;
};

}  // namespace gfc
