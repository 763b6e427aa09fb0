#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lrs2mc/lrs.hpp"
#include "lrs2mc/matrix.hpp"
#include "lrs2mc/rational.hpp"

namespace lrs2mc {

enum class QueryKind {
    Equal,                // does the n-step probability hit the threshold?
    Less,                 // does it drop below the threshold at some step?
    InfinitelyOftenLess,  // does it drop below the threshold infinitely often?
};

// A Markov reachability instance: column-stochastic matrix M with strictly
// positive entries, source/target state indices (0-based in memory, 1-based
// in files), and a threshold compared against entry (target, source) of M^n.
struct MarkovInstance {
    Matrix matrix;
    std::size_t source;
    std::size_t target;
    Rational threshold;
    QueryKind query;
};

// Every intermediate object of the construction, sufficient to re-verify the
// instance against its source recurrence by exact computation:
//   S = s 1^T with uniform s, C embeds B = F^{-1} A F with a zero last
//   column and balancing bottom row, D = (C - CS)/rho, M = S + D.
struct ReductionCertificate {
    std::vector<Rational> stationary;  // s, k+1 entries, each 1/(k+1)
    Matrix S;
    std::vector<Rational> anchor;  // first k entries of (I - S) e_j
    Rational eta;
    Matrix F;  // k x k diagonal, f_11 = 1
    Matrix B;
    Matrix C;
    Rational gamma;  // max |entry of C - CS|
    Rational sigma;  // min entry of S
    Rational rho;    // 2 gamma / sigma
    Matrix D;
};

struct AnchorChoice {
    std::size_t source;  // j, 0-based: 0 when u_0 > 0, 1 when u_0 < 0
    Rational eta;        // positive scale with eta * u_0 = anchor[0]
    std::vector<Rational> anchor;
};

// Picks the source column and the scale eta so that the anchor column can be
// rescaled onto eta * u by a diagonal matrix with unit first entry. Requires
// every initial term nonzero.
AnchorChoice choose_anchor(const Lrs& l);

// Runs the construction end to end. Requires every initial term nonzero and a
// non-degenerate input (the latter is established upstream, not re-checked).
ReductionCertificate build_certificate(const Lrs& l);

// Assembles the reachability instance: M = S + D of dimension (k+1) x (k+1),
// threshold r = 1/(k+1), target = first state. For n >= 1,
//   entry (target, source) of M^n  minus  r  =  eta * u_n / rho^n,
// so the query on M matches the zero/sign pattern of the sequence. For
// Less / InfinitelyOftenLess queries every initial term must be strictly
// positive; a non-positive term already answers the underlying question and
// the call refuses with an explanation.
std::pair<MarkovInstance, ReductionCertificate> build_instance(const Lrs& l, QueryKind query);

}  // namespace lrs2mc
