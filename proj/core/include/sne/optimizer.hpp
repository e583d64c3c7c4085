#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sne/likelihood.hpp"
#include "sne/model.hpp"
#include "sne/signed_network.hpp"

namespace sne {

enum class InitScheme { Random, Spectral };

struct FitConfig {
    int K1 = 3;
    int K2 = 3;
    double C = 2.0;
    double kappa = 1.0;
    double a_n = 0.1;
    double xi1 = 0.0; // 0 means the 1/n default
    double xi2 = 0.0;
    double xi3 = 0.0; // 0 means the 0.5/n^2 default
    double xi4 = 0.0;
    int max_iter = 2000;
    double tol = 1e-6;
    bool learn_intercepts = false;
    Intercepts intercepts{};
    std::uint64_t seed = 0;
    InitScheme init = InitScheme::Spectral;

    void validate() const;
};

struct FitResult {
    EmbeddingState state;
    std::vector<double> objective_trace;
    int iterations = 0;
    bool converged = false;
};

/// Thrown when the objective becomes non-finite; callers should shrink steps.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Feasible starting point satisfying every EmbeddingState constraint.
EmbeddingState init_state(const SignedNetwork& Y, const FitConfig& config);

/// Alternating projected gradient descent with per-block backtracking.
FitResult fit(const SignedNetwork& Y, const FitConfig& config,
              const LinkFunction& link);

} // namespace sne
