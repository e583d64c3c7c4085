#pragma once

#include <Eigen/Dense>

#include "sne/model.hpp"
#include "sne/signed_network.hpp"

namespace sne {

/// Gradient of +log L with respect to B, A and the intercepts.
struct LikelihoodGradient {
    Eigen::MatrixXd gB;
    Eigen::MatrixXd gA;
    double gd0 = 0.0;
    double gd1 = 0.0;
};

/// One pairwise pass over i<j: objective plus everything the optimizer needs.
struct LikelihoodStats {
    double neg_log_lik = 0.0;
    LikelihoodGradient grad;
};

/// -sum_{i<j} log p(y_ij | m_ij). Finite via the probability floor.
double neg_log_likelihood(const SignedNetwork& Y, const EmbeddingState& state,
                          const LinkFunction& link);

/// Analytic gradient of +log L at the given state.
LikelihoodGradient gradient(const SignedNetwork& Y, const EmbeddingState& state,
                            const LinkFunction& link);

/// Objective and gradient from a single pass.
LikelihoodStats likelihood_stats(const SignedNetwork& Y, const EmbeddingState& state,
                                 const LinkFunction& link);

/// Central finite differences of neg_log_likelihood, entry by entry.
/// Returned as a gradient of +log L so it is directly comparable to gradient().
LikelihoodGradient fd_gradient(const SignedNetwork& Y, const EmbeddingState& state,
                               const LinkFunction& link, double step);

} // namespace sne
