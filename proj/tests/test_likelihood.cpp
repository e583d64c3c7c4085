#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "sne/likelihood.hpp"

using namespace sne;

namespace {

EmbeddingState random_state(int n, int k1, int k2, unsigned seed, double scale = 0.5) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist(0.0, scale);
    EmbeddingState s;
    s.B.resize(n, k1);
    s.A.resize(n, k2);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < k1; ++k) s.B(i, k) = dist(rng);
        for (int k = 0; k < k2; ++k) s.A(i, k) = dist(rng);
    }
    return s;
}

SignedNetwork random_network(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> sign(-1, 1);
    SignedNetwork net(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) net.set(i, j, sign(rng));
    return net;
}

// independent naive-loop oracle
double nll_oracle(const SignedNetwork& Y, const EmbeddingState& s,
                  const LinkFunction& link) {
    double total = 0.0;
    for (int i = 0; i < Y.n(); ++i) {
        for (int j = i + 1; j < Y.n(); ++j) {
            double m = 0.0;
            for (int k = 0; k < s.B.cols(); ++k) {
                const double d = s.B(i, k) - s.B(j, k);
                m -= d * d;
            }
            for (int k = 0; k < s.A.cols(); ++k) m += s.A(i, k) * s.A(j, k);
            total -= std::log(prob(Y.entry(i, j), m, s.d, link));
        }
    }
    return total;
}

double max_rel_err(const LikelihoodGradient& a, const LikelihoodGradient& b) {
    auto rel = [](double x, double y) {
        return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1.0});
    };
    double worst = 0.0;
    for (int i = 0; i < a.gB.rows(); ++i)
        for (int k = 0; k < a.gB.cols(); ++k)
            worst = std::max(worst, rel(a.gB(i, k), b.gB(i, k)));
    for (int i = 0; i < a.gA.rows(); ++i)
        for (int k = 0; k < a.gA.cols(); ++k)
            worst = std::max(worst, rel(a.gA(i, k), b.gA(i, k)));
    worst = std::max(worst, rel(a.gd0, b.gd0));
    worst = std::max(worst, rel(a.gd1, b.gd1));
    return worst;
}

} // namespace

TEST_CASE("single-pair value through prob") {
    SignedNetwork Y(2); // y_12 = 0
    EmbeddingState s;
    s.B = Eigen::MatrixXd::Zero(2, 2); // m_12 = 0
    s.A = Eigen::MatrixXd::Zero(2, 2);
    const double v = neg_log_likelihood(Y, s, LinkFunction::logit());
    CHECK(v == doctest::Approx(0.7719368329053047).epsilon(1e-12));
}

TEST_CASE("matches scalar-loop oracle") {
    for (const auto& link : {LinkFunction::logit(), LinkFunction::probit()}) {
        const auto Y = random_network(9, 5);
        const auto s = random_state(9, 3, 2, 6);
        CHECK(neg_log_likelihood(Y, s, link) ==
              doctest::Approx(nll_oracle(Y, s, link)).epsilon(1e-10));
    }
}

TEST_CASE("pure function: repeated evaluation identical") {
    const auto Y = random_network(8, 11);
    const auto s = random_state(8, 2, 2, 12);
    const double a = neg_log_likelihood(Y, s, LinkFunction::logit());
    const double b = neg_log_likelihood(Y, s, LinkFunction::logit());
    CHECK(a == b);
}

TEST_CASE("dimension mismatch rejected") {
    const auto Y = random_network(8, 1);
    const auto s = random_state(7, 2, 2, 2);
    CHECK_THROWS_AS(neg_log_likelihood(Y, s, LinkFunction::logit()),
                    std::invalid_argument);
}

TEST_CASE("gradient matches finite differences on random instances") {
    int idx = 0;
    for (int n : {8, 12}) {
        for (const auto& link : {LinkFunction::logit(), LinkFunction::probit()}) {
            for (int rep = 0; rep < 5; ++rep, ++idx) {
                const auto Y = random_network(n, 100 + idx);
                const auto s = random_state(n, 2, 2, 200 + idx);
                const auto g = gradient(Y, s, link);
                const auto fd = fd_gradient(Y, s, link, 1e-5);
                CHECK(max_rel_err(g, fd) < 1e-5);
            }
        }
    }
}

TEST_CASE("gA vanishes when A is zero") {
    const auto Y = random_network(10, 3);
    auto s = random_state(10, 2, 2, 4);
    s.A.setZero();
    const auto g = gradient(Y, s, LinkFunction::logit());
    CHECK(g.gA.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("gB vanishes when B is zero") {
    const auto Y = random_network(10, 7);
    auto s = random_state(10, 2, 2, 8);
    s.B.setZero(); // beta_i - beta_j = 0 kills every gB term
    const auto g = gradient(Y, s, LinkFunction::logit());
    CHECK(g.gB.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("fd_gradient second-order accuracy") {
    const auto Y = random_network(8, 21);
    const auto s = random_state(8, 2, 2, 22);
    const auto link = LinkFunction::logit();
    const auto exact = gradient(Y, s, link);
    const double e1 = max_rel_err(exact, fd_gradient(Y, s, link, 2e-4));
    const double e2 = max_rel_err(exact, fd_gradient(Y, s, link, 1e-4));
    CHECK(e2 < e1); // error shrinks (roughly 4x) as the step halves
    CHECK(e1 / e2 > 2.0);
}

TEST_CASE("invariance under simultaneous node permutation") {
    const int n = 10;
    const auto Y = random_network(n, 31);
    const auto s = random_state(n, 3, 2, 32);
    const auto link = LinkFunction::logit();
    const double base = neg_log_likelihood(Y, s, link);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), std::mt19937(33));

    SignedNetwork Yp(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            Yp.set(perm[i], perm[j], Y.entry(i, j));
    EmbeddingState sp = s;
    for (int i = 0; i < n; ++i) {
        sp.B.row(perm[i]) = s.B.row(i);
        sp.A.row(perm[i]) = s.A.row(i);
    }
    CHECK(neg_log_likelihood(Yp, sp, link) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("invariance under orthogonal rotation of B rows") {
    const auto Y = random_network(9, 41);
    const auto s = random_state(9, 3, 2, 42);
    const auto link = LinkFunction::logit();
    const double base = neg_log_likelihood(Y, s, link);

    // a random rotation via QR
    Eigen::MatrixXd R(3, 3);
    std::mt19937 rng(43);
    std::normal_distribution<double> dist;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) R(i, j) = dist(rng);
    const Eigen::MatrixXd Q = Eigen::HouseholderQR<Eigen::MatrixXd>(R).householderQ();

    EmbeddingState rotated = s;
    rotated.B = s.B * Q;
    CHECK(neg_log_likelihood(Y, rotated, link) == doctest::Approx(base).epsilon(1e-12));
}
