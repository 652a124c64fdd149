#ifndef SMT_TYPES_HPP
#define SMT_TYPES_HPP

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "smt/scaling.hpp"

namespace smt {

/// The m hypotheses with their p-values. Entries keep input order; rank
/// order is derived by sorting on (p, id) so ties break deterministically.
struct PValueSet {
    struct Entry {
        std::string id;
        double p;
    };

    std::vector<Entry> entries;

    std::size_t size() const { return entries.size(); }

    // Indices into entries, sorted by (p, id).
    std::vector<std::size_t> rank_order() const;
};

/// Validates p in [0,1], unique ids, m >= 1. Transformed sets (p/w) may
/// carry values above 1 and skip this.
PValueSet make_pvalue_set(std::vector<PValueSet::Entry> entries);

/// Which hypotheses are truly null (I0) vs alternative (I1). Only the
/// simulation and metrics side ever sees this.
struct GroundTruth {
    std::set<std::string> null_ids;
    std::set<std::string> alternative_ids;

    std::size_t m0() const { return null_ids.size(); }
    std::size_t m1() const { return alternative_ids.size(); }
};

GroundTruth make_ground_truth(std::set<std::string> null_ids,
                              std::set<std::string> alternative_ids);

/// Result of a step-wise procedure: the hypotheses at the U smallest
/// transformed p-values are rejected.
struct RejectionOutcome {
    std::vector<std::string> rejected_ids; // in rank order
    int boundary_rank = 0;                 // U, 0 when nothing is rejected

    std::size_t count() const { return rejected_ids.size(); }
};

/// Confusion counts of one procedure run against the truth.
struct Confusion {
    long fp = 0;
    long tp = 0;
    long fn = 0;
    long tn = 0;

    long rejections() const { return fp + tp; }
    long m() const { return fp + tp + fn + tn; }
};

Confusion confusion(const RejectionOutcome& outcome, const GroundTruth& truth);

/// FP / s(R), 0 when R = 0. With linear scaling this is the FDP.
double sfdp(const Confusion& c, const ScalingSpec& spec);

} // namespace smt

#endif // SMT_TYPES_HPP
