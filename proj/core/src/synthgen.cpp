#include "sne/synthgen.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sne {

namespace {

constexpr int kDim = 3;
constexpr int kBlocks = 4;

struct Gen {
    std::mt19937_64 rng;
    std::normal_distribution<double> stdnorm{0.0, 1.0};
    std::uniform_real_distribution<double> unit{0.0, 1.0};

    explicit Gen(std::uint64_t seed) : rng(seed) {}

    Eigen::VectorXd normal_vec(int k, double sd = 1.0) {
        Eigen::VectorXd v(k);
        for (int i = 0; i < k; ++i) v(i) = sd * stdnorm(rng);
        return v;
    }
};

// Common machinery for both examples: anomaly mixture, edge sampling, truth.
SyntheticInstance build(int n, double a_n, std::uint64_t seed, const Intercepts& d_star,
                        const std::array<double, kBlocks>& block_probs,
                        double within_sd) {
    if (n < 8) throw std::invalid_argument("synthgen: need n >= 8");
    if (a_n < 0.0 || a_n > 1.0) throw std::invalid_argument("synthgen: a_n in [0,1]");
    Gen gen(seed);

    // centers redrawn per replication
    std::vector<Eigen::VectorXd> centers;
    for (int l = 0; l < kBlocks; ++l) centers.push_back(gen.normal_vec(kDim));

    // Omega2 diagonal drawn once
    Eigen::VectorXd omega(kDim);
    for (int k = 0; k < kDim; ++k) omega(k) = 0.1 * gen.unit(gen.rng);

    GroundTruth truth;
    truth.d_star = d_star;
    truth.B_star.resize(n, kDim);
    truth.A_star.setZero(n, kDim);
    truth.labels.resize(n);

    for (int i = 0; i < n; ++i) {
        const double u = gen.unit(gen.rng);
        double acc = 0.0;
        int label = kBlocks;
        for (int l = 0; l < kBlocks; ++l) {
            acc += block_probs[l];
            if (u < acc) { label = l + 1; break; }
        }
        truth.labels[i] = label;
        Eigen::VectorXd beta = centers[label - 1];
        if (within_sd > 0.0) beta += gen.normal_vec(kDim, within_sd);
        truth.B_star.row(i) = beta;

        if (a_n > 0.0 && gen.unit(gen.rng) < a_n) {
            const double sign = gen.unit(gen.rng) < 0.5 ? 1.0 : -1.0;
            for (int k = 0; k < kDim; ++k)
                truth.A_star(i, k) = sign + std::sqrt(omega(k)) * gen.stdnorm(gen.rng);
        }
    }

    EmbeddingState star;
    star.B = truth.B_star;
    star.A = truth.A_star;
    star.d = d_star;
    truth.M_star = latent_m(star);

    const Eigen::MatrixXd S_star = truth.A_star * truth.A_star.transpose();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (S_star(i, j) != 0.0) truth.S_star_support.insert({i, j});

    std::uint64_t edge_seed = gen.rng();
    SignedNetwork net =
        sample_edges(truth.M_star, d_star, LinkFunction::logit(), edge_seed);
    return {std::move(net), std::move(truth)};
}

} // namespace

SyntheticInstance gen_example1(int n, double a_n, std::uint64_t seed,
                               const Intercepts& d_star) {
    return build(n, a_n, seed, d_star, {0.1, 0.2, 0.3, 0.4}, 0.0);
}

SyntheticInstance gen_example2(int n, double a_n, std::uint64_t seed,
                               const Intercepts& d_star) {
    return build(n, a_n, seed, d_star, {0.25, 0.25, 0.25, 0.25}, 0.1);
}

SignedNetwork sample_edges(const Eigen::MatrixXd& M_star, const Intercepts& d_star,
                           const LinkFunction& link, std::uint64_t seed) {
    const int n = static_cast<int>(M_star.rows());
    if (M_star.cols() != n) throw std::invalid_argument("sample_edges: square M required");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    SignedNetwork net(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double m = M_star(i, j);
            const double p_neg = prob(-1, m, d_star, link);
            const double p_zero = prob(0, m, d_star, link);
            const double u = unit(rng);
            int t = 1;
            if (u < p_neg) t = -1;
            else if (u < p_neg + p_zero) t = 0;
            net.set(i, j, t);
        }
    }
    return net;
}

} // namespace sne
