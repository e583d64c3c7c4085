#pragma once

#include <vector>

#include "sne/optimizer.hpp"

namespace sne {

struct CandidateScore {
    int m = 0;
    double score = 0.0;
    double neg_log_lik = 0.0;
    double df = 0.0;
    bool failed = false;
};

struct SelectionResult {
    std::vector<CandidateScore> scores;
    int chosen_m = 0;
    std::vector<FitResult> fits; // aligned with scores
};

/// BIC-style selection of the community count. For each m in the grid: fit
/// with K1 = K2 = m-1, cluster the balance embedding into m groups, collapse
/// each row onto its cluster center, and score the block-constant model with
/// 2*negLL + df*log(n(n-1)/2) where df = m(m-1) + 2 (m centers in m-1
/// dimensions plus the two intercepts). Raw per-node likelihoods keep
/// improving with every extra dimension, so scoring the collapsed model is
/// what makes the criterion sensitive to the community count rather than the
/// embedding dimension. Ties broken toward smaller m. Throws if every
/// candidate fails.
SelectionResult select_m(const SignedNetwork& Y, const std::vector<int>& m_grid,
                         const FitConfig& config_template, const LinkFunction& link);

} // namespace sne
