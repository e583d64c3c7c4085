#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace sne {

struct CommunityAssignment {
    std::vector<int> labels;   // values in 1..m
    Eigen::MatrixXd centers;   // m x K
    double within_ss = 0.0;
    bool empty_cluster = false; // fewer than m distinct rows were available
};

/// k-means++ seeding plus Lloyd iterations, best of `restarts` runs by
/// within-cluster sum of squares. Deterministic given seed; ties broken by
/// lowest center index; empty clusters re-seeded from the farthest point.
CommunityAssignment kmeans_embed(const Eigen::MatrixXd& points, int m,
                                 int restarts, std::uint64_t seed);

} // namespace sne
