#include "sne/kmeans.hpp"

#include <limits>
#include <random>
#include <stdexcept>

namespace sne {

namespace {

struct Run {
    std::vector<int> assign; // 0-based
    Eigen::MatrixXd centers;
    double within_ss = std::numeric_limits<double>::infinity();
    bool empty_cluster = false;
};

double sq_dist(const Eigen::MatrixXd& pts, int i, const Eigen::MatrixXd& centers,
               int c) {
    return (pts.row(i) - centers.row(c)).squaredNorm();
}

Run lloyd_once(const Eigen::MatrixXd& pts, int m, std::uint64_t seed) {
    const int n = static_cast<int>(pts.rows());
    std::mt19937_64 rng(seed);
    Run run;
    run.centers.resize(m, pts.cols());

    // k-means++ seeding
    std::uniform_int_distribution<int> first(0, n - 1);
    run.centers.row(0) = pts.row(first(rng));
    Eigen::VectorXd d2(n);
    for (int i = 0; i < n; ++i) d2(i) = sq_dist(pts, i, run.centers, 0);
    for (int c = 1; c < m; ++c) {
        const double total = d2.sum();
        int pick = 0;
        if (total > 0.0) {
            std::uniform_real_distribution<double> u(0.0, total);
            double r = u(rng), acc = 0.0;
            for (int i = 0; i < n; ++i) {
                acc += d2(i);
                if (acc >= r) { pick = i; break; }
            }
        } else {
            pick = first(rng); // all points coincide with chosen centers
        }
        run.centers.row(c) = pts.row(pick);
        for (int i = 0; i < n; ++i)
            d2(i) = std::min(d2(i), sq_dist(pts, i, run.centers, c));
    }

    run.assign.assign(n, 0);
    for (int pass = 0; pass < 200; ++pass) {
        // assignment, ties to the lowest center index
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            int best = 0;
            double best_d = sq_dist(pts, i, run.centers, 0);
            for (int c = 1; c < m; ++c) {
                const double dd = sq_dist(pts, i, run.centers, c);
                if (dd < best_d) { best_d = dd; best = c; }
            }
            if (run.assign[i] != best) { run.assign[i] = best; changed = true; }
        }
        // update; empty clusters grab the farthest point
        Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(m, pts.cols());
        std::vector<int> counts(m, 0);
        for (int i = 0; i < n; ++i) {
            sums.row(run.assign[i]) += pts.row(i);
            counts[run.assign[i]]++;
        }
        for (int c = 0; c < m; ++c) {
            if (counts[c] > 0) {
                run.centers.row(c) = sums.row(c) / counts[c];
            } else {
                int far = 0;
                double far_d = -1.0;
                for (int i = 0; i < n; ++i) {
                    const double dd = sq_dist(pts, i, run.centers, run.assign[i]);
                    if (dd > far_d) { far_d = dd; far = i; }
                }
                run.centers.row(c) = pts.row(far);
                run.assign[far] = c;
                changed = true;
            }
        }
        if (!changed && pass > 0) break;
    }

    run.within_ss = 0.0;
    std::vector<int> counts(m, 0);
    for (int i = 0; i < n; ++i) {
        run.within_ss += sq_dist(pts, i, run.centers, run.assign[i]);
        counts[run.assign[i]]++;
    }
    for (int c = 0; c < m; ++c)
        if (counts[c] == 0) run.empty_cluster = true;
    return run;
}

} // namespace

CommunityAssignment kmeans_embed(const Eigen::MatrixXd& points, int m,
                                 int restarts, std::uint64_t seed) {
    const int n = static_cast<int>(points.rows());
    if (m < 1 || m > n) throw std::invalid_argument("kmeans_embed: need 1 <= m <= n");
    if (restarts < 1) throw std::invalid_argument("kmeans_embed: restarts >= 1");

    Run best;
    for (int r = 0; r < restarts; ++r) {
        // fixed offsets keep results identical however restarts are scheduled
        Run run = lloyd_once(points, m, seed + 0x9e3779b97f4a7c15ULL * (r + 1));
        if (run.within_ss < best.within_ss) best = std::move(run);
    }

    CommunityAssignment out;
    out.labels.resize(n);
    for (int i = 0; i < n; ++i) out.labels[i] = best.assign[i] + 1;
    out.centers = std::move(best.centers);
    out.within_ss = best.within_ss;
    out.empty_cluster = best.empty_cluster;
    return out;
}

} // namespace sne
