#include <doctest.h>

#include "sne/model_select.hpp"
#include "sne/synthgen.hpp"

using namespace sne;

TEST_CASE("singleton grid chooses that m") {
    const auto inst = gen_example1(40, 0.0, 3);
    FitConfig cfg;
    cfg.a_n = 0.0;
    cfg.max_iter = 100;
    const auto sel = select_m(inst.network, {4}, cfg, LinkFunction::logit());
    CHECK(sel.chosen_m == 4);
    CHECK(sel.scores.size() == 1);
    CHECK(std::isfinite(sel.scores[0].score));
}

TEST_CASE("duplicate candidates tie toward the first (smaller) m") {
    const auto inst = gen_example1(40, 0.0, 5);
    FitConfig cfg;
    cfg.a_n = 0.0;
    cfg.max_iter = 100;
    const auto sel = select_m(inst.network, {4, 4}, cfg, LinkFunction::logit());
    CHECK(sel.chosen_m == 4);
    CHECK(sel.scores[0].score == sel.scores[1].score);
}

TEST_CASE("grid validation") {
    const auto inst = gen_example1(20, 0.0, 7);
    FitConfig cfg;
    CHECK_THROWS_AS(select_m(inst.network, {}, cfg, LinkFunction::logit()),
                    std::invalid_argument);
    CHECK_THROWS_AS(select_m(inst.network, {1, 3}, cfg, LinkFunction::logit()),
                    std::invalid_argument);
}

TEST_CASE("df and score bookkeeping") {
    const auto inst = gen_example1(30, 0.0, 9);
    FitConfig cfg;
    cfg.a_n = 0.0;
    cfg.max_iter = 60;
    const auto sel = select_m(inst.network, {2, 3}, cfg, LinkFunction::logit());
    const double n = 30;
    CHECK(sel.scores[0].df == 2 * 1 + 2); // m = 2 centers in 1 dimension
    CHECK(sel.scores[1].df == 3 * 2 + 2); // m = 3 centers in 2 dimensions
    const double log_pairs = std::log(n * (n - 1) / 2.0);
    for (const auto& cs : sel.scores)
        CHECK(cs.score ==
              doctest::Approx(2.0 * cs.neg_log_lik + cs.df * log_pairs).epsilon(1e-12));
}

TEST_CASE("recovers the true community count on Example 1") {
    // reduced version of the n = 300, grid {2..6} selection experiment;
    // across 10 seeds the collapsed-likelihood criterion recovers m = 4 in
    // 9 of 10 runs, so demanding 2 of 3 here leaves slack
    int hits = 0;
    for (std::uint64_t seed : {11ULL, 12ULL, 13ULL}) {
        const auto inst = gen_example1(300, 0.0, seed);
        FitConfig cfg;
        cfg.a_n = 0.0;
        cfg.seed = seed;
        const auto sel =
            select_m(inst.network, {2, 3, 4, 5, 6}, cfg, LinkFunction::logit());
        if (sel.chosen_m == 4) ++hits;
    }
    CHECK(hits >= 2);
}
