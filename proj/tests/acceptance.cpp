// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits 0 only if every criterion passes. Heavier criteria
// reuse a shared grid of replicated experiments so the whole suite stays well
// inside its time budget on a single core.

#include <algorithm>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "sne/detection.hpp"
#include "sne/io.hpp"
#include "sne/kmeans.hpp"
#include "sne/likelihood.hpp"
#include "sne/model.hpp"
#include "sne/model_select.hpp"
#include "sne/optimizer.hpp"
#include "sne/projections.hpp"
#include "sne/synthgen.hpp"

namespace fs = std::filesystem;
using namespace sne;

namespace {

constexpr std::uint64_t kMaster = 20260824ULL;
constexpr int kReps = 20;

void report(int id, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s — %s\n", id, ok ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// ---------------------------------------------------------------- criterion 1

double max_rel_err(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    double worst = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const double denom =
                std::max({std::abs(a(i, j)), std::abs(b(i, j)), 1.0});
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)) / denom);
        }
    return worst;
}

bool criterion1() {
    double worst = 0.0;
    int idx = 0;
    for (const auto& link : {LinkFunction::logit(), LinkFunction::probit()}) {
        for (int n : {8, 12}) {
            for (int rep = 0; rep < 5; ++rep, ++idx) {
                std::mt19937_64 rng(200 + idx);
                // uniform random signs over all pairs; embedding scale keeps
                // every category probability far from the clamp floor, where
                // the objective is smooth and finite differences are valid
                SignedNetwork net(n);
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        net.set(i, j, int(rng() % 3) - 1);
                std::normal_distribution<double> dist(0.0, 0.4);
                EmbeddingState st;
                st.B.resize(n, 2);
                st.A.resize(n, 2);
                for (int i = 0; i < n; ++i)
                    for (int k = 0; k < 2; ++k) {
                        st.B(i, k) = dist(rng);
                        st.A(i, k) = dist(rng);
                    }
                const auto ga = gradient(net, st, link);
                const auto gf = fd_gradient(net, st, link, 1e-5);
                worst = std::max(worst, max_rel_err(ga.gB, gf.gB));
                worst = std::max(worst, max_rel_err(ga.gA, gf.gA));
                const double dd0 = std::abs(ga.gd0 - gf.gd0) /
                                   std::max({std::abs(ga.gd0), std::abs(gf.gd0), 1.0});
                const double dd1 = std::abs(ga.gd1 - gf.gd1) /
                                   std::max({std::abs(ga.gd1), std::abs(gf.gd1), 1.0});
                worst = std::max({worst, dd0, dd1});
            }
        }
    }
    const bool ok = worst < 1e-5;
    report(1, ok,
           fmt("analytic vs finite-difference gradient on 20 instances, max "
               "relative error %.3e (< 1e-5)",
               worst));
    return ok;
}

// ---------------------------------------------------------------- criterion 2

bool criterion2() {
    double worst = 0.0;
    int combos = 0;
    for (const auto& link : {LinkFunction::logit(), LinkFunction::probit()}) {
        // wide grid that stays clear of the probability clamp floor (the
        // clamp deliberately trades exact normalization for log-safety in
        // deep saturation, so the algebraic identity is checked where every
        // category probability exceeds the floor)
        for (int im = 0; im < 50; ++im) {
            const double m = -4.0 + im * (8.0 / 49.0);
            for (int id = 0; id < 20; ++id) {
                Intercepts d;
                d.d1 = -2.0 + id * 0.15;
                d.d0 = d.d1 + 0.3 + 0.075 * id;
                const double total = prob(-1, m, d, link) + prob(0, m, d, link) +
                                     prob(1, m, d, link);
                worst = std::max(worst, std::abs(total - 1.0));
                ++combos;
            }
        }
    }
    const bool ok = worst <= 1e-12;
    report(2, ok,
           fmt("probability normalization over %d (m, d) combinations per "
               "link, max |sum - 1| = %.3e (<= 1e-12)",
               combos / 2, worst));
    return ok;
}

// ---------------------------------------------------------------- criterion 3

bool criterion3() {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> dist(0.0, 2.0);
    std::uniform_real_distribution<double> cap_dist(0.1, 5.0);
    double worst_idem = 0.0, worst_cap = 0.0, worst_comp = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 5 + int(rng() % 30);
        const int k = 1 + int(rng() % 4);
        Eigen::MatrixXd X(n, k);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) X(i, j) = dist(rng);
        const double c = cap_dist(rng);

        const Eigen::MatrixXd pf = project_frobenius(X, c);
        worst_cap = std::max(worst_cap, pf.norm() - c);
        worst_idem =
            std::max(worst_idem, (project_frobenius(pf, c) - pf).norm());

        const Eigen::MatrixXd pr = project_row_norm(X, c);
        worst_cap =
            std::max(worst_cap, pr.rowwise().norm().maxCoeff() - c);
        worst_idem =
            std::max(worst_idem, (project_row_norm(pr, c) - pr).norm());

        Eigen::MatrixXd basis(n, 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < 2; ++j) basis(i, j) = dist(rng);
        const Eigen::MatrixXd pc = project_complement(basis, X);
        worst_comp = std::max(
            worst_comp, (basis.transpose() * pc).cwiseAbs().maxCoeff());
    }
    const bool ok =
        worst_idem < 1e-12 && worst_cap < 1e-12 && worst_comp < 1e-10;
    report(3, ok,
           fmt("projections on 100 random matrices: idempotence drift %.3e, "
               "cap excess %.3e, |basis' * complement| %.3e (< 1e-10)",
               worst_idem, worst_cap, worst_comp));
    return ok;
}

// ---------------------------------------------------------------- criterion 4

bool criterion4() {
    double worst_colsum = 0.0, worst_row = 0.0, worst_orth = 0.0,
           worst_frob = 0.0;
    bool trace_ok = true;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto inst = gen_example1(100, 0.1, seed);
        FitConfig cfg;
        cfg.seed = seed;
        const auto res = fit(inst.network, cfg, LinkFunction::logit());
        const auto& st = res.state;
        worst_colsum = std::max(
            {worst_colsum, st.B.colwise().sum().cwiseAbs().maxCoeff(),
             st.A.colwise().sum().cwiseAbs().maxCoeff()});
        worst_row = std::max({worst_row,
                              st.B.rowwise().norm().maxCoeff() - cfg.C,
                              st.A.rowwise().norm().maxCoeff() - cfg.C});
        worst_orth = std::max(
            worst_orth, (st.B.transpose() * st.A).cwiseAbs().maxCoeff());
        worst_frob =
            std::max(worst_frob, st.A.norm() - cfg.kappa * std::sqrt(cfg.a_n) *
                                                   st.B.norm());
        trace_ok = trace_ok &&
                   res.objective_trace.back() <= res.objective_trace.front();
    }
    const bool ok = worst_colsum < 1e-8 && worst_row < 1e-8 &&
                    worst_orth < 1e-4 && worst_frob < 1e-8 && trace_ok;
    report(4, ok,
           fmt("10 seeded n=100 fits: column-sum %.2e, row-norm excess %.2e, "
               "|B'A| %.2e, Frobenius-cap excess %.2e, trace nonincreasing "
               "end-to-end: %s",
               worst_colsum, worst_row, worst_orth, worst_frob,
               trace_ok ? "yes" : "no"));
    return ok;
}

// ---------------------------------------------------------------- criterion 5

CommunityError brute_force_error(const std::vector<int>& truth,
                                 const std::vector<int>& est, int m) {
    const int n = int(truth.size());
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 1);
    CommunityError best{1e300, 1e300};
    do {
        int wrong = 0;
        std::vector<int> size(m, 0), miss(m, 0);
        for (int i = 0; i < n; ++i) {
            const int mapped = perm[est[i] - 1];
            ++size[truth[i] - 1];
            if (mapped != truth[i]) {
                ++wrong;
                ++miss[truth[i] - 1];
            }
        }
        best.overall = std::min(best.overall, double(wrong) / n);
        double worst = 0.0;
        for (int c = 0; c < m; ++c)
            if (size[c] > 0)
                worst = std::max(worst, double(miss[c]) / size[c]);
        best.worst_case = std::min(best.worst_case, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool criterion5() {
    std::mt19937_64 rng(55);
    bool comm_ok = true;
    for (int rep = 0; rep < 50; ++rep) {
        const int m = 3 + int(rep % 2);
        std::vector<int> truth(12), est(12);
        for (int i = 0; i < 12; ++i) {
            truth[i] = 1 + int(rng() % m);
            est[i] = 1 + int(rng() % m);
        }
        const auto got = community_error(truth, est, m);
        const auto want = brute_force_error(truth, est, m);
        comm_ok = comm_ok && std::abs(got.overall - want.overall) < 1e-12 &&
                  std::abs(got.worst_case - want.worst_case) < 1e-12;
    }

    bool fdp_ok = true;
    for (int rep = 0; rep < 20; ++rep) {
        PairSet flagged, truth_set;
        for (int i = 0; i < 15; ++i)
            for (int j = i + 1; j < 15; ++j) {
                if (rng() % 3 == 0) flagged.insert({i, j});
                if (rng() % 4 == 0) truth_set.insert({i, j});
            }
        int false_pos = 0;
        for (const auto& p : flagged)
            if (!truth_set.count(p)) ++false_pos;
        const double want =
            double(false_pos) / std::max<std::size_t>(flagged.size(), 1);
        fdp_ok = fdp_ok &&
                 std::abs(false_discovery_proportion(flagged, truth_set) -
                          want) < 1e-15;
    }
    const bool ok = comm_ok && fdp_ok;
    report(5, ok,
           fmt("community_error matches exhaustive permutations on 50 label "
               "pairs (%s); FDP matches direct set counting (%s)",
               comm_ok ? "yes" : "no", fdp_ok ? "yes" : "no"));
    return ok;
}

// ------------------------------------------------------- criteria 6 and 7

struct CellStats {
    double err = 0.0;  // mean community error
    double fdp = 0.0;  // mean FDP at the fixed benchmark threshold
    double merr = 0.0; // mean ||M_hat - M*||_F / n
};

// Replication r reuses the same generator seed across every cell so the trend
// comparisons in criterion 7 are paired: the same block centers appear at
// every n, which removes the dominant source of between-cell variance.
CellStats run_cell(int n, double a_n) {
    CellStats cs;
    for (int r = 0; r < kReps; ++r) {
        const std::uint64_t seed = kMaster + std::uint64_t(r);
        const auto inst = gen_example1(n, a_n, seed);
        FitConfig cfg;
        cfg.a_n = a_n;
        cfg.seed = seed;
        const auto res = fit(inst.network, cfg, LinkFunction::logit());
        const auto km = kmeans_embed(res.state.B, 4, 50, seed);
        cs.err += community_error(inst.truth.labels, km.labels, 4).overall;
        cs.merr += (latent_m(res.state) - inst.truth.M_star).norm() / n;
        if (a_n > 0.0) {
            const auto rep =
                threshold_anomalies(anomaly_scores(res.state.A), 0.3);
            cs.fdp += false_discovery_proportion(rep.flagged,
                                                 inst.truth.S_star_support);
        }
    }
    cs.err /= kReps;
    cs.merr /= kReps;
    cs.fdp /= kReps;
    return cs;
}

bool criterion6(const CellStats& c200_a0) {
    const bool ok = c200_a0.err <= 0.10;
    report(6, ok,
           fmt("n=200, a_n=0, %d replications: mean community error %.4f "
               "(<= 0.10)",
               kReps, c200_a0.err));
    return ok;
}

bool criterion7(const CellStats& c200_a0, const CellStats& c200_a1,
                const CellStats& c500_a0, const CellStats& c500_a1,
                const CellStats& c1000_a1) {
    const bool trend_err =
        c500_a0.err < c200_a0.err && c500_a1.err < c200_a1.err;
    const bool trend_fdp =
        c500_a1.fdp < c200_a1.fdp && c1000_a1.fdp < c500_a1.fdp;
    const bool trend_m = c500_a1.merr < c200_a1.merr;
    const bool ok = trend_err && trend_fdp && trend_m;
    report(7, ok,
           fmt("paired trends over %d replications: community error "
               "n=200→500 (%.4f→%.4f at a_n=0, %.4f→%.4f at a_n=0.1), FDP "
               "n=200→500→1000 (%.4f→%.4f→%.4f), ||M_hat - M*||_F/n "
               "n=200→500 (%.4f→%.4f)",
               kReps, c200_a0.err, c500_a0.err, c200_a1.err, c500_a1.err,
               c200_a1.fdp, c500_a1.fdp, c1000_a1.fdp, c200_a1.merr,
               c500_a1.merr));
    return ok;
}

// ---------------------------------------------------------------- criterion 8

bool criterion8() {
    // a_n = 0 must zero the anomaly block exactly
    const auto inst = gen_example1(50, 0.0, 8);
    FitConfig cfg;
    cfg.a_n = 0.0;
    cfg.seed = 8;
    cfg.max_iter = 200;
    const auto res = fit(inst.network, cfg, LinkFunction::logit());
    const bool zero_ok = res.state.A.isZero(0.0);

    // an all-zero network must fit without error
    bool empty_ok = true;
    try {
        const SignedNetwork empty(30);
        FitConfig ecfg;
        ecfg.max_iter = 50;
        fit(empty, ecfg, LinkFunction::logit());
    } catch (...) {
        empty_ok = false;
    }

    // m = 1 detection path: a single community and the median threshold
    const auto km = kmeans_embed(res.state.B, 1, 5, 8);
    const bool m1_ok = std::all_of(km.labels.begin(), km.labels.end(),
                                   [](int l) { return l == 1; });
    const auto rep = threshold_anomalies(anomaly_scores(res.state.A),
                                         default_eta(anomaly_scores(res.state.A)));
    const bool det_ok = rep.flagged.empty(); // scores are identically zero

    const bool ok = zero_ok && empty_ok && m1_ok && det_ok;
    report(8, ok,
           fmt("degenerate inputs: a_n=0 gives A_hat == 0 exactly (%s), "
               "all-zero network fits (%s), m=1 detection completes (%s)",
               zero_ok ? "yes" : "no", empty_ok ? "yes" : "no",
               (m1_ok && det_ok) ? "yes" : "no"));
    return ok;
}

// ---------------------------------------------------------------- criterion 9

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool criterion9() {
    const char* cli = std::getenv("SNE_CLI");
    if (!cli) {
        report(9, false, "SNE_CLI environment variable not set");
        return false;
    }
    const fs::path tmp =
        fs::temp_directory_path() /
        ("sne_accept_" + std::to_string(std::random_device{}()));
    fs::create_directories(tmp);
    bool ok = true;
    std::string detail;
    const std::string args =
        " --deterministic benchmark --example 1 --n 40 --a-n 0.1 --reps 2 "
        "--seed 17 --out ";
    for (const char* dir : {"b1", "b2"}) {
        const std::string cmd =
            std::string(cli) + args + (tmp / dir).string() + " >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        if (WEXITSTATUS(status) != 0) {
            ok = false;
            detail = "benchmark run failed";
        }
    }
    if (ok) {
        for (const char* f : {"table1_like.csv", "table3_like.csv"}) {
            if (slurp(tmp / "b1" / f) != slurp(tmp / "b2" / f)) {
                ok = false;
                detail = std::string("files differ: ") + f;
            }
        }
        if (ok)
            detail = "two seeded benchmark runs produced byte-identical "
                     "table1_like.csv and table3_like.csv";
    }
    fs::remove_all(tmp);
    report(9, ok, detail);
    return ok;
}

} // namespace

int main() {
    bool all = true;
    all &= criterion1();
    all &= criterion2();
    all &= criterion3();
    all &= criterion4();
    all &= criterion5();

    const CellStats c200_a0 = run_cell(200, 0.0);
    all &= criterion6(c200_a0);
    const CellStats c200_a1 = run_cell(200, 0.1);
    const CellStats c500_a0 = run_cell(500, 0.0);
    const CellStats c500_a1 = run_cell(500, 0.1);
    const CellStats c1000_a1 = run_cell(1000, 0.1);
    all &= criterion7(c200_a0, c200_a1, c500_a0, c500_a1, c1000_a1);

    all &= criterion8();
    all &= criterion9();

    std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
    return all ? 0 : 1;
}
