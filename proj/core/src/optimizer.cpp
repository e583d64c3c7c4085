#include "sne/optimizer.hpp"

#include <cmath>
#include <random>

#include "sne/projections.hpp"

namespace sne {

void FitConfig::validate() const {
    if (K1 < 1 || K2 < 0) throw std::invalid_argument("FitConfig: bad K1/K2");
    if (C <= 0.0) throw std::invalid_argument("FitConfig: C must be > 0");
    if (kappa <= 0.0) throw std::invalid_argument("FitConfig: kappa must be > 0");
    if (a_n < 0.0 || a_n > 1.0) throw std::invalid_argument("FitConfig: a_n in [0,1]");
    if (tol <= 0.0) throw std::invalid_argument("FitConfig: tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("FitConfig: max_iter >= 1");
    intercepts.validate();
}

namespace {

constexpr int kMaxHalvings = 20;

Eigen::MatrixXd with_ones(const Eigen::MatrixXd& B) {
    Eigen::MatrixXd basis(B.rows(), B.cols() + 1);
    basis << B, Eigen::VectorXd::Ones(B.rows());
    return basis;
}

// Full A projection chain of the update scheme: orthogonal complement of
// (B, 1), Frobenius cap, then row-norm cap.
Eigen::MatrixXd project_anomaly(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                                const FitConfig& cfg) {
    const double cap = cfg.kappa * std::sqrt(cfg.a_n) * B.norm();
    Eigen::MatrixXd out = project_complement(with_ones(B), A);
    out = project_frobenius(out, cap);
    return project_row_norm(out, cfg.C);
}

} // namespace

EmbeddingState init_state(const SignedNetwork& Y, const FitConfig& config) {
    config.validate();
    const int n = Y.n();
    std::mt19937_64 rng(config.seed);
    std::normal_distribution<double> noise(0.0, 0.1);

    EmbeddingState state;
    state.d = config.intercepts;
    state.B.resize(n, config.K1);
    state.A.resize(n, config.K2);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < config.K2; ++k) state.A(i, k) = noise(rng);

    if (config.init == InitScheme::Spectral) {
        // Classical MDS on the double-centered adjacency: Y stands in for the
        // negative squared-distance matrix L up to the link scale.
        const Eigen::MatrixXd Yd = Y.dense().cast<double>();
        const Eigen::MatrixXd H =
            0.5 * center_columns(center_columns(Yd).transpose()).transpose();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(H);
        // eigenvalues come out ascending
        for (int k = 0; k < config.K1; ++k) {
            const int idx = n - 1 - k;
            const double lam = eig.eigenvalues()(idx);
            if (lam > 1e-10) {
                state.B.col(k) = std::sqrt(lam) * eig.eigenvectors().col(idx);
            } else {
                for (int i = 0; i < n; ++i) state.B(i, k) = noise(rng);
            }
        }
    } else {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < config.K1; ++k) state.B(i, k) = noise(rng);
    }

    state.B = project_row_norm(center_columns(state.B), config.C);
    state.A = project_anomaly(center_columns(state.A), state.B, config);
    return state;
}

FitResult fit(const SignedNetwork& Y, const FitConfig& config,
              const LinkFunction& link) {
    config.validate();
    const int n = Y.n();
    const double xi1 = config.xi1 > 0.0 ? config.xi1 : 1.0 / n;
    const double xi2 = config.xi2 > 0.0 ? config.xi2 : 1.0 / n;
    const double xi3 = config.xi3 > 0.0 ? config.xi3 : 0.5 / (double(n) * n);
    const double xi4 = config.xi4 > 0.0 ? config.xi4 : 0.5 / (double(n) * n);

    FitResult result;
    result.state = init_state(Y, config);
    EmbeddingState& state = result.state;

    double cur = neg_log_likelihood(Y, state, link);
    if (!std::isfinite(cur)) throw DivergenceError("fit: non-finite objective at init");
    result.objective_trace.push_back(cur);

    // Backtracking per block: try the full step, halve on objective increase,
    // keep the old block value if no step helps.
    auto try_block = [&](double step, auto&& candidate_of, auto&& apply) {
        for (int h = 0; h <= kMaxHalvings; ++h, step *= 0.5) {
            auto cand = candidate_of(step);
            EmbeddingState probe = state;
            apply(probe, cand);
            const double nll = neg_log_likelihood(Y, probe, link);
            if (!std::isfinite(nll)) throw DivergenceError("fit: non-finite objective");
            if (nll <= cur) {
                state = std::move(probe);
                cur = nll;
                return;
            }
        }
    };

    for (int iter = 1; iter <= config.max_iter; ++iter) {
        // B step at (B^k, A^k); A is re-projected against the new B inside the
        // candidate so the iterate stays feasible even when the A step later
        // rejects every step size.
        LikelihoodStats stats = likelihood_stats(Y, state, link);
        try_block(
            xi1,
            [&](double s) {
                Eigen::MatrixXd B = project_row_norm(
                    center_columns(state.B + s * stats.grad.gB), config.C);
                Eigen::MatrixXd A = project_anomaly(state.A, B, config);
                return std::pair{std::move(B), std::move(A)};
            },
            [](EmbeddingState& st, std::pair<Eigen::MatrixXd, Eigen::MatrixXd>& BA) {
                st.B = std::move(BA.first);
                st.A = std::move(BA.second);
            });

        // A step at (B^{k+1}, A^k)
        stats = likelihood_stats(Y, state, link);
        try_block(
            xi2,
            [&](double s) {
                return project_anomaly(state.A + s * stats.grad.gA, state.B, config);
            },
            [](EmbeddingState& st, Eigen::MatrixXd& A) { st.A = std::move(A); });

        if (config.learn_intercepts) {
            // d1 at (B^{k+1}, A^{k+1}, d^k), then d0 at (d0^k, d1^{k+1})
            stats = likelihood_stats(Y, state, link);
            try_block(
                xi3,
                [&](double s) {
                    return clamp_interval(state.d.d1 + s * stats.grad.gd1,
                                          state.d.c1, state.d.d0 - state.d.delta);
                },
                [](EmbeddingState& st, double d1) { st.d.d1 = d1; });

            stats = likelihood_stats(Y, state, link);
            try_block(
                xi4,
                [&](double s) {
                    return clamp_interval(state.d.d0 + s * stats.grad.gd0,
                                          state.d.d1 + state.d.delta, state.d.c2);
                },
                [](EmbeddingState& st, double d0) { st.d.d0 = d0; });
        }

        const double prev = result.objective_trace.back();
        result.objective_trace.push_back(cur);
        result.iterations = iter;
        if (std::abs(prev - cur) / std::max(std::abs(cur), 1e-30) < config.tol) {
            result.converged = true;
            break;
        }
    }
    return result;
}

} // namespace sne
