#include "smt/types.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace smt {

std::vector<std::size_t> PValueSet::rank_order() const {
    std::vector<std::size_t> order(entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
        if (entries[a].p != entries[b].p) return entries[a].p < entries[b].p;
        return entries[a].id < entries[b].id;
    });
    return order;
}

PValueSet make_pvalue_set(std::vector<PValueSet::Entry> entries) {
    if (entries.empty()) throw std::invalid_argument("p-value set must contain at least one entry");
    std::set<std::string> seen;
    for (const auto& e : entries) {
        if (!(e.p >= 0.0 && e.p <= 1.0))
            throw std::invalid_argument("p-value out of [0,1] for id " + e.id);
        if (!seen.insert(e.id).second)
            throw std::invalid_argument("duplicate hypothesis id " + e.id);
    }
    return PValueSet{std::move(entries)};
}

GroundTruth make_ground_truth(std::set<std::string> null_ids,
                              std::set<std::string> alternative_ids) {
    for (const auto& id : null_ids)
        if (alternative_ids.count(id))
            throw std::invalid_argument("id in both null and alternative sets: " + id);
    return GroundTruth{std::move(null_ids), std::move(alternative_ids)};
}

Confusion confusion(const RejectionOutcome& outcome, const GroundTruth& truth) {
    Confusion c;
    for (const auto& id : outcome.rejected_ids) {
        if (truth.null_ids.count(id)) {
            ++c.fp;
        } else if (truth.alternative_ids.count(id)) {
            ++c.tp;
        } else {
            throw std::invalid_argument("rejected id not in truth universe: " + id);
        }
    }
    c.fn = static_cast<long>(truth.m1()) - c.tp;
    c.tn = static_cast<long>(truth.m0()) - c.fp;
    return c;
}

double sfdp(const Confusion& c, const ScalingSpec& spec) {
    const long r = c.rejections();
    if (r == 0) return 0.0;
    return static_cast<double>(c.fp) /
           evaluate_scaling(spec, static_cast<int>(r), static_cast<int>(c.m()));
}

} // namespace smt
