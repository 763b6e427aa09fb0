#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lrs2mc/degeneracy.hpp"
#include "lrs2mc/analysis.hpp"
#include "lrs2mc/reduction.hpp"

namespace lrs2mc {

struct PipelineConfig {
    enum class Command { Reduce, Verify, Eval, Decompose, Reverse, Scan, Selftest };

    Command command = Command::Reduce;
    std::vector<std::string> inputs;  // positional input paths
    std::string out;                  // --out: directory for reduce, file otherwise
    QueryKind query = QueryKind::Equal;
    std::size_t horizon = kDefaultVerifyHorizon;     // >= 1
    std::size_t window_cap = kDefaultWindowCap;      // >= 1
    std::uint64_t seed = 0;                          // selftest only
};

// Exit status: 0 on success / verification pass, 1 on verification or
// selftest failure, 2 on malformed input or violated preconditions.
int run_command(const PipelineConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace lrs2mc
