#include "sne/model_select.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sne/kmeans.hpp"
#include "sne/likelihood.hpp"

namespace sne {

SelectionResult select_m(const SignedNetwork& Y, const std::vector<int>& m_grid,
                         const FitConfig& config_template, const LinkFunction& link) {
    if (m_grid.empty()) throw std::invalid_argument("select_m: empty grid");
    for (int m : m_grid)
        if (m < 2) throw std::invalid_argument("select_m: every m must be >= 2");

    const double n = Y.n();
    const double log_pairs = std::log(n * (n - 1.0) / 2.0);

    SelectionResult result;
    double best_score = std::numeric_limits<double>::infinity();
    for (int m : m_grid) {
        FitConfig cfg = config_template;
        cfg.K1 = m - 1;
        cfg.K2 = m - 1;
        CandidateScore cs;
        cs.m = m;
        cs.df = double(m) * (m - 1.0) + 2.0;
        FitResult fr;
        try {
            fr = fit(Y, cfg, link);
            const auto km = kmeans_embed(fr.state.B, m, 50, cfg.seed);
            EmbeddingState collapsed = fr.state;
            for (int i = 0; i < Y.n(); ++i)
                collapsed.B.row(i) = km.centers.row(km.labels[i] - 1);
            cs.neg_log_lik = neg_log_likelihood(Y, collapsed, link);
            cs.score = 2.0 * cs.neg_log_lik + cs.df * log_pairs;
        } catch (const DivergenceError&) {
            cs.failed = true;
        }
        if (!cs.failed &&
            (cs.score < best_score ||
             (cs.score == best_score && m < result.chosen_m))) {
            best_score = cs.score;
            result.chosen_m = m;
        }
        result.scores.push_back(cs);
        result.fits.push_back(std::move(fr));
    }
    if (result.chosen_m == 0)
        throw std::runtime_error("select_m: every candidate failed");
    return result;
}

} // namespace sne
