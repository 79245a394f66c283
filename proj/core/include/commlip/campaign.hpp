#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "commlip/matrix_lab.hpp"

namespace commlip {

struct CampaignConfig {
    int n_max = 6;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string f_name = "f1";  // see campaign_function
    NormKind norm = NormKind::operator_norm();
    bool same_ab = false;        // B = A
    bool normalize_a = false;    // ||A|| = 1 instead of a random scale 10^U(-2, 2)
    double min_commutator = 0.0; // skip samples with |||AX - XB||| below this
    unsigned threads = 1;

    void validate() const;
};

struct CampaignInstance {
    CMatrix A;
    CMatrix B;
    CMatrix X;
};

struct CampaignReport {
    CampaignConfig config;
    std::uint64_t evaluated = 0; // ratios that entered the maximum
    std::uint64_t skipped = 0;   // zero ratios and filtered samples
    double max_ratio = 0.0;
    CampaignInstance argmax;
    double histogram_width = 0.05;
    std::vector<std::uint64_t> histogram; // last bin collects everything beyond
};

/// "f1" -> x/(x+1), "sqrt" -> x^{1/2}, "pow:R" -> x^R, "ft:T" -> sqrt(x+T) - sqrt(T).
ScalarFn campaign_function(const std::string& name);

/// Trials are split into a fixed number of shards, each with its own generator
/// seeded from (seed, shard), so the report does not depend on `threads`.
CampaignReport monte_carlo_campaign(const CampaignConfig& cfg);

} // namespace commlip
