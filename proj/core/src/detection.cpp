#include "sne/detection.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sne {

Eigen::MatrixXd anomaly_scores(const Eigen::MatrixXd& A_hat) {
    Eigen::MatrixXd S = A_hat * A_hat.transpose();
    // mirror for exact symmetry
    for (int i = 0; i < S.rows(); ++i)
        for (int j = i + 1; j < S.cols(); ++j) S(j, i) = S(i, j);
    return S;
}

AnomalyReport threshold_anomalies(const Eigen::MatrixXd& S_hat, double eta) {
    if (eta < 0.0) throw std::invalid_argument("threshold_anomalies: eta >= 0");
    AnomalyReport rep;
    rep.S_hat = S_hat;
    rep.eta = eta;
    const int n = static_cast<int>(S_hat.rows());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(S_hat(i, j)) > eta) rep.flagged.insert({i, j});
    return rep;
}

double default_eta(const Eigen::MatrixXd& S_hat) {
    const int n = static_cast<int>(S_hat.rows());
    if (n < 2) throw std::invalid_argument("default_eta: need n >= 2");
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) vals.push_back(std::abs(S_hat(i, j)));
    // lower median for even counts
    const std::size_t k = (vals.size() - 1) / 2;
    std::nth_element(vals.begin(), vals.begin() + k, vals.end());
    return vals[k];
}

double false_discovery_proportion(const PairSet& flagged,
                                  const PairSet& true_support) {
    if (flagged.empty()) return 0.0;
    std::size_t false_count = 0;
    for (const auto& p : flagged)
        if (!true_support.count(p)) ++false_count;
    return static_cast<double>(false_count) / static_cast<double>(flagged.size());
}

std::vector<int> hungarian(const Eigen::MatrixXd& cost) {
    // Kuhn-Munkres with potentials, O(m^3); 1-based internal arrays.
    const int m = static_cast<int>(cost.rows());
    if (cost.cols() != m) throw std::invalid_argument("hungarian: square matrix required");
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(m + 1, 0.0), v(m + 1, 0.0);
    std::vector<int> p(m + 1, 0), way(m + 1, 0);
    for (int i = 1; i <= m; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(m + 1, inf);
        std::vector<char> used(m + 1, false);
        do {
            used[j0] = true;
            const int i0 = p[j0];
            double delta = inf;
            int j1 = 0;
            for (int j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) { minv[j] = cur; way[j] = j0; }
                if (minv[j] < delta) { delta = minv[j]; j1 = j; }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[j]) { u[p[j]] += delta; v[j] -= delta; }
                else minv[j] -= delta;
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> match(m);
    for (int j = 1; j <= m; ++j) match[p[j] - 1] = j - 1;
    return match;
}

CommunityError community_error(const std::vector<int>& truth_labels,
                               const std::vector<int>& est_labels, int m) {
    const int n = static_cast<int>(truth_labels.size());
    if (est_labels.size() != truth_labels.size())
        throw std::invalid_argument("community_error: label vectors differ in length");
    for (int i = 0; i < n; ++i) {
        if (truth_labels[i] < 1 || truth_labels[i] > m || est_labels[i] < 1 ||
            est_labels[i] > m)
            throw std::out_of_range("community_error: label out of range");
    }

    // overlap(l, k) = |N_l* intersect N-hat_k|
    Eigen::MatrixXd overlap = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd truth_size = Eigen::VectorXd::Zero(m);
    for (int i = 0; i < n; ++i) {
        overlap(truth_labels[i] - 1, est_labels[i] - 1) += 1.0;
        truth_size(truth_labels[i] - 1) += 1.0;
    }

    auto eval_perm = [&](const std::vector<int>& perm) {
        double missed = 0.0, worst = 0.0;
        for (int l = 0; l < m; ++l) {
            const double miss = truth_size(l) - overlap(l, perm[l]);
            missed += miss;
            if (truth_size(l) > 0.0) worst = std::max(worst, miss / truth_size(l));
        }
        return std::pair<double, double>{missed / n, worst};
    };

    CommunityError err;
    if (m <= 8) {
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        double best_overall = std::numeric_limits<double>::infinity();
        double best_worst = std::numeric_limits<double>::infinity();
        do {
            const auto [overall, worst] = eval_perm(perm);
            best_overall = std::min(best_overall, overall);
            best_worst = std::min(best_worst, worst);
        } while (std::next_permutation(perm.begin(), perm.end()));
        err.overall = best_overall;
        err.worst_case = best_worst;
    } else {
        const auto match = hungarian(-overlap);
        const auto [overall, worst] = eval_perm(match);
        err.overall = overall;
        err.worst_case = worst;
    }
    return err;
}

} // namespace sne
