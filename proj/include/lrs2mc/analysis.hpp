#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrs2mc/lrs.hpp"
#include "lrs2mc/matrix.hpp"
#include "lrs2mc/reduction.hpp"

namespace lrs2mc {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::size_t horizon;
    bool overall;  // pass exactly when every check passes
};

struct ErgodicityReport {
    bool ergodic;
    std::size_t witness;  // least N with M^N entrywise positive, when ergodic
    std::string failure;  // reason and zero pattern otherwise
};

struct QueryScanResult {
    std::optional<std::size_t> witness;  // least n <= horizon satisfying the query
    std::vector<std::size_t> hits;       // all hits, collected for the infinitary query
};

inline constexpr std::size_t kDefaultVerifyHorizon = 30;

// Re-derives every identity of the construction by exact computation:
// stochasticity, positivity, the S/D decomposition and its annihilation
// relations, stationarity, the power decompositions up to the horizon, the
// step-n correspondence with the sequence terms, and the step-0 edge facts.
// Throws on dimension mismatches between the inputs.
VerificationReport verify_certificate(const Lrs& l, const MarkovInstance& inst,
                                      const ReductionCertificate& cert, std::size_t horizon);

// Least N <= budget with M^N entrywise strictly positive. Positivity patterns
// of powers of a nonnegative matrix never cancel, so the scan runs on boolean
// patterns. A budget of at least wielandt_bound(dim) makes the verdict final.
// Throws on non-stochastic input.
ErgodicityReport check_ergodicity(const Matrix& m, std::size_t budget);

// (d-1)^2 + 1: every primitive d x d nonnegative matrix has an entrywise
// positive power with exponent at most this, so failure at this budget rules
// ergodicity out.
std::size_t wielandt_bound(std::size_t dim);

// The sequence v_n = entry (target, source) of M^n minus the threshold
// satisfies the recurrence read from (x - 1) * char_poly(M). Low-order zero
// coefficients (singular M) are stripped; the returned start shift says how
// many leading terms the recurrence skips: term n of the result equals
// v_{n + shift}. Throws on non-stochastic input or indices out of range.
std::pair<Lrs, std::size_t> reverse_reduce(const Matrix& m, std::size_t target,
                                           std::size_t source, const Rational& threshold);

// Whether entry (target, source) of M^n equals the threshold for infinitely
// many n: true exactly when some stride component of the reverse-reduced
// difference sequence is identically zero.
bool decide_infinite_equality(const Matrix& m, std::size_t target, std::size_t source,
                              const Rational& threshold);

// Bounded search for query witnesses. Absence below the horizon decides
// nothing; for the infinitary query the hit list is a diagnostic only.
QueryScanResult query_scan(const MarkovInstance& inst, std::size_t horizon);

}  // namespace lrs2mc
