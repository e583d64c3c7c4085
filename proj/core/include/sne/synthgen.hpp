#pragma once

#include <cstdint>

#include "sne/detection.hpp"
#include "sne/model.hpp"
#include "sne/signed_network.hpp"

namespace sne {

/// Generator-side truth for metric computation.
struct GroundTruth {
    Eigen::MatrixXd B_star; // n x 3
    Eigen::MatrixXd A_star; // n x 3
    std::vector<int> labels; // values in 1..4
    PairSet S_star_support;  // pairs i<j with s*_ij != 0
    Intercepts d_star;
    Eigen::MatrixXd M_star;
};

struct SyntheticInstance {
    SignedNetwork network;
    GroundTruth truth;
};

/// Four-block SSBM: centers b_l ~ N(0, I3), memberships with probabilities
/// (0.1, 0.2, 0.3, 0.4), beta_i = b_{psi_i}; anomaly rows from the two-sided
/// Gaussian mixture at +-1 with rate a_n.
SyntheticInstance gen_example1(int n, double a_n, std::uint64_t seed,
                               const Intercepts& d_star = {});

/// As example 1 but equal block probabilities and beta_i ~ N(b_{psi_i}, 0.01 I3).
SyntheticInstance gen_example2(int n, double a_n, std::uint64_t seed,
                               const Intercepts& d_star = {});

/// Samples y_ij in {-1,0,1} independently for i<j with probabilities
/// prob(t | m_ij) and mirrors to (j,i).
SignedNetwork sample_edges(const Eigen::MatrixXd& M_star, const Intercepts& d_star,
                           const LinkFunction& link, std::uint64_t seed);

} // namespace sne
