#pragma once

#include <Eigen/Dense>
#include <set>
#include <utility>
#include <vector>

namespace sne {

using PairSet = std::set<std::pair<int, int>>; // unordered pairs stored i < j

struct AnomalyReport {
    Eigen::MatrixXd S_hat;
    double eta = 0.0;
    PairSet flagged; // pairs with |s_ij| > eta
};

/// S_hat = A_hat A_hat'.
Eigen::MatrixXd anomaly_scores(const Eigen::MatrixXd& A_hat);

/// Flags every unordered pair with |s_ij| > eta (strict).
AnomalyReport threshold_anomalies(const Eigen::MatrixXd& S_hat, double eta);

/// Lower median of {|s_ij| : i < j}.
double default_eta(const Eigen::MatrixXd& S_hat);

/// |flagged \ true_support| / max(|flagged|, 1).
double false_discovery_proportion(const PairSet& flagged,
                                  const PairSet& true_support);

struct CommunityError {
    double overall = 0.0;    // permutation-minimized misclustering proportion
    double worst_case = 0.0; // permutation-minimized worst per-community rate
};

/// Misclustering proportions minimized over permutations of community
/// indices; exhaustive search for m <= 8, Hungarian matching above that.
/// Labels are 1-based.
CommunityError community_error(const std::vector<int>& truth_labels,
                               const std::vector<int>& est_labels, int m);

/// Minimum-cost assignment on a square cost matrix; returns the column
/// matched to each row. Exposed for cross-checking against brute force.
std::vector<int> hungarian(const Eigen::MatrixXd& cost);

} // namespace sne
