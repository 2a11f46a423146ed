#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "framekit/types.hpp"

namespace framekit {

enum class Hypothesis { Met, Violated, Skipped };

inline const char* hypothesis_name(Hypothesis h) {
    switch (h) {
        case Hypothesis::Met: return "met";
        case Hypothesis::Violated: return "violated";
        default: return "skipped";
    }
}

// Per-claim verification record. A record with hypothesis != Met never
// counts as a failure; pass is only meaningful when the hypothesis holds.
struct TheoremReport {
    std::string claim_id;
    std::string frame_label;
    Hypothesis hypothesis = Hypothesis::Met;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // signed slack, >= -tolerance on pass
    bool pass = false;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<Vec> witnesses;
    std::string note;

    bool counts_as_failure() const { return hypothesis == Hypothesis::Met && !pass; }
};

}  // namespace framekit
