#include "sne/likelihood.hpp"

#include <cmath>
#include <stdexcept>

namespace sne {

namespace {

void check_dims(const SignedNetwork& Y, const EmbeddingState& state) {
    if (Y.n() != state.n())
        throw std::invalid_argument("likelihood: network and state sizes differ");
    if (state.B.rows() != state.A.rows())
        throw std::invalid_argument("likelihood: B and A row counts differ");
}

} // namespace

LikelihoodStats likelihood_stats(const SignedNetwork& Y, const EmbeddingState& state,
                                 const LinkFunction& link) {
    check_dims(Y, state);
    const int n = Y.n();
    const Intercepts& d = state.d;
    if (d.d1 > d.d0)
        throw std::invalid_argument("likelihood: invalid intercepts (d1 > d0)");

    const Eigen::MatrixXd M = latent_m(state);
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(n, n); // g_ij = p'(y|m)/p(y|m)
    LikelihoodStats out;
    double gd0 = 0.0, gd1 = 0.0, nll = 0.0;

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int y = Y.entry(i, j);
            const double m = M(i, j);
            const double p = prob(y, m, d, link);
            nll -= std::log(p);
            const double g = prob_deriv(y, m, d, link) / p;
            G(i, j) = g;
            G(j, i) = g;
            // d/dd1 log p: only p(0) and p(1) depend on d1; likewise d0.
            switch (y) {
                case 1:
                    gd1 += link.deriv(d.d1 + m) / p;
                    break;
                case 0:
                    gd1 -= link.deriv(d.d1 + m) / p;
                    gd0 += link.deriv(d.d0 + m) / p;
                    break;
                case -1:
                    gd0 -= link.deriv(d.d0 + m) / p;
                    break;
            }
        }
    }

    const Eigen::VectorXd rowsum = G.rowwise().sum();
    out.grad.gB = 2.0 * (G * state.B - rowsum.asDiagonal() * state.B);
    out.grad.gA = G * state.A;
    out.grad.gd0 = gd0;
    out.grad.gd1 = gd1;
    out.neg_log_lik = nll;
    return out;
}

double neg_log_likelihood(const SignedNetwork& Y, const EmbeddingState& state,
                          const LinkFunction& link) {
    check_dims(Y, state);
    const int n = Y.n();
    const Eigen::MatrixXd M = latent_m(state);
    double nll = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            nll -= std::log(prob(Y.entry(i, j), M(i, j), state.d, link));
    return nll;
}

LikelihoodGradient gradient(const SignedNetwork& Y, const EmbeddingState& state,
                            const LinkFunction& link) {
    return likelihood_stats(Y, state, link).grad;
}

LikelihoodGradient fd_gradient(const SignedNetwork& Y, const EmbeddingState& state,
                               const LinkFunction& link, double step) {
    if (step <= 0.0) throw std::invalid_argument("fd_gradient: step must be > 0");
    check_dims(Y, state);

    EmbeddingState probe = state;
    auto central = [&](double& x) {
        const double saved = x;
        x = saved + step;
        const double hi = neg_log_likelihood(Y, probe, link);
        x = saved - step;
        const double lo = neg_log_likelihood(Y, probe, link);
        x = saved;
        // negLL difference, negated: gradient of +log L
        return -(hi - lo) / (2.0 * step);
    };

    LikelihoodGradient out;
    out.gB.resize(state.B.rows(), state.B.cols());
    out.gA.resize(state.A.rows(), state.A.cols());
    for (int i = 0; i < state.B.rows(); ++i)
        for (int k = 0; k < state.B.cols(); ++k) out.gB(i, k) = central(probe.B(i, k));
    for (int i = 0; i < state.A.rows(); ++i)
        for (int k = 0; k < state.A.cols(); ++k) out.gA(i, k) = central(probe.A(i, k));
    out.gd0 = central(probe.d.d0);
    out.gd1 = central(probe.d.d1);
    return out;
}

} // namespace sne
