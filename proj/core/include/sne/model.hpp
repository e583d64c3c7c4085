#pragma once

#include <Eigen/Dense>

#include "sne/link.hpp"

namespace sne {

/// Ordinal-model intercepts d = (d0, d1) with the feasible box used by the
/// clamped updates: c1 <= d1 <= d0 - delta and d0 <= c2.
struct Intercepts {
    double d0 = 1.0;
    double d1 = -1.0;
    double delta = 0.1;
    double c1 = -10.0;
    double c2 = 10.0;

    void validate() const;
};

/// Node embeddings: B rows are balance vectors, A rows are anomaly vectors.
struct EmbeddingState {
    Eigen::MatrixXd B; // n x K1
    Eigen::MatrixXd A; // n x K2
    Intercepts d;

    int n() const { return static_cast<int>(B.rows()); }
};

/// Derived latent matrices: l_ij = -||b_i - b_j||^2, s_ij = a_i' a_j,
/// M = L + S.
struct LatentDecomposition {
    Eigen::MatrixXd L;
    Eigen::MatrixXd S;
    Eigen::MatrixXd M;
};

/// Probabilities are clamped below at this value before any log.
inline constexpr double kProbFloor = 1e-12;

LatentDecomposition latent_matrix(const EmbeddingState& state);

/// M alone (cheaper than the full decomposition).
Eigen::MatrixXd latent_m(const EmbeddingState& state);

/// Pr(y >= t | m): 1 for t <= -1, f(d_t + m) for t in {0,1}, 0 for t >= 2.
double survival(int t, double m, const Intercepts& d, const LinkFunction& link);

/// Pr(y = t | m) = survival(t) - survival(t+1), clamped to [kProbFloor, 1].
/// Throws if d1 > d0.
double prob(int t, double m, const Intercepts& d, const LinkFunction& link);

/// d/dm Pr(y = t | m), closed form per category.
double prob_deriv(int t, double m, const Intercepts& d, const LinkFunction& link);

} // namespace sne
