#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lrs2mc/lrs.hpp"
#include "lrs2mc/matrix.hpp"
#include "lrs2mc/rational.hpp"

namespace lrs2mc {

// Deterministic generator for the randomized property suites. Draws avoid the
// standard distributions so a given seed yields the same stream everywhere.
class TestRng {
  public:
    explicit TestRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t bound);         // uniform in [0, bound)
    long range(long lo, long hi);                     // uniform in [lo, hi]
    Rational rational(long max_abs_num, long max_den, bool nonzero);

  private:
    std::mt19937_64 eng_;
};

Lrs random_lrs(TestRng& rng, std::size_t order, long bound, bool nonzero_initials);
// Rejection-samples until degeneracy_orders comes back empty; initial terms
// are nonzero so the result feeds the reduction directly.
Lrs random_nondegenerate_lrs(TestRng& rng, std::size_t order, long bound);
// Column-stochastic with nonnegative entries; zero entries are allowed and
// welcome (they exercise the ergodicity and reverse paths).
Matrix random_stochastic(TestRng& rng, std::size_t dim);

struct SuiteResult {
    std::string name;
    std::size_t cases;
    bool pass;
    std::string detail;  // first failure, empty when passing
};

struct SelftestSummary {
    std::vector<SuiteResult> suites;
    bool all_pass;
};

// Runs every randomized property suite with the given seed. Deterministic:
// the same seed produces the same summary.
SelftestSummary run_selftest(std::uint64_t seed);

}  // namespace lrs2mc
