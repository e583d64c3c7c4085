// Command-line front end: generate / fit / detect / select / benchmark.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>
#include <vector>

#include "sne/detection.hpp"
#include "sne/io.hpp"
#include "sne/kmeans.hpp"
#include "sne/model_select.hpp"
#include "sne/optimizer.hpp"
#include "sne/synthgen.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

// exit codes
constexpr int kOk = 0;
constexpr int kParseError = 2;
constexpr int kDivergence = 3;
constexpr int kIoError = 4;

struct ManifestWriter {
    json j;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool deterministic = false;

    ManifestWriter(const std::string& command, bool det) : deterministic(det) {
        j["command"] = command;
        j["version"] = kVersion;
        j["deterministic"] = det;
    }
    void add_input(const fs::path& p) { j["inputs"].push_back(p.string()); }
    void add_output(const fs::path& p) { j["outputs"].push_back(p.string()); }
    void write(const fs::path& dir) {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        j["wall_time_ms"] = deterministic ? 0 : elapsed;
        std::ofstream out(dir / "manifest.json");
        if (!out) throw std::runtime_error("cannot write manifest");
        out << j.dump(2) << '\n';
    }
};

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create directory " + dir.string());
}

sne::FitConfig load_config(const std::string& config_path) {
    if (config_path.empty()) return {};
    return sne::io::read_fit_config(config_path);
}

json config_snapshot(const sne::FitConfig& cfg) {
    return {{"K1", cfg.K1}, {"K2", cfg.K2}, {"C", cfg.C}, {"kappa", cfg.kappa},
            {"a_n", cfg.a_n}, {"xi1", cfg.xi1}, {"xi2", cfg.xi2}, {"xi3", cfg.xi3},
            {"xi4", cfg.xi4}, {"max_iter", cfg.max_iter}, {"tol", cfg.tol},
            {"learn_intercepts", cfg.learn_intercepts},
            {"d0", cfg.intercepts.d0}, {"d1", cfg.intercepts.d1},
            {"delta", cfg.intercepts.delta}, {"c1", cfg.intercepts.c1},
            {"c2", cfg.intercepts.c2}, {"seed", cfg.seed},
            {"init", cfg.init == sne::InitScheme::Spectral ? "spectral" : "random"}};
}

int cmd_generate(int example, int n, double a_n, std::uint64_t seed, double d0,
                 double d1, const fs::path& out_dir, bool deterministic) {
    ensure_dir(out_dir);
    ManifestWriter manifest("generate", deterministic);
    manifest.j["config"] = {{"example", example}, {"n", n}, {"a_n", a_n},
                            {"d0", d0}, {"d1", d1}};
    manifest.j["seed"] = seed;

    sne::Intercepts d;
    d.d0 = d0;
    d.d1 = d1;
    auto inst = example == 1 ? sne::gen_example1(n, a_n, seed, d)
                             : sne::gen_example2(n, a_n, seed, d);

    sne::io::write_edge_list(out_dir / "edges.tsv", inst.network);
    sne::io::write_labels_csv(out_dir / "truth_labels.csv", inst.truth.labels);
    sne::io::write_pairs_csv(out_dir / "truth_support.csv", inst.truth.S_star_support);
    for (const char* f : {"edges.tsv", "truth_labels.csv", "truth_support.csv"})
        manifest.add_output(out_dir / f);
    manifest.write(out_dir);
    return kOk;
}

int cmd_fit(const fs::path& edges_path, const std::string& config_path,
            const fs::path& out_dir, bool deterministic) {
    ensure_dir(out_dir);
    ManifestWriter manifest("fit", deterministic);
    manifest.add_input(edges_path);

    const sne::SignedNetwork Y = sne::io::read_edge_list(edges_path);
    const sne::FitConfig cfg = load_config(config_path);
    manifest.j["config"] = config_snapshot(cfg);
    manifest.j["seed"] = cfg.seed;
    manifest.j["edges"] = edges_path.string();

    const sne::FitResult res = sne::fit(Y, cfg, sne::LinkFunction::logit());

    sne::io::write_matrix_csv(out_dir / "B_hat.csv", res.state.B);
    sne::io::write_matrix_csv(out_dir / "A_hat.csv", res.state.A);
    {
        std::ofstream out(out_dir / "intercepts.json");
        out << json{{"d0", res.state.d.d0}, {"d1", res.state.d.d1}}.dump(2) << '\n';
    }
    {
        std::ofstream out(out_dir / "objective_trace.csv");
        out << "iter,neg_log_likelihood\n";
        for (std::size_t i = 0; i < res.objective_trace.size(); ++i)
            out << i << ',' << sne::io::format_double(res.objective_trace[i]) << '\n';
    }
    manifest.j["iterations"] = res.iterations;
    manifest.j["converged"] = res.converged;
    for (const char* f : {"B_hat.csv", "A_hat.csv", "intercepts.json", "objective_trace.csv"})
        manifest.add_output(out_dir / f);
    manifest.write(out_dir);
    return kOk;
}

int cmd_detect(const fs::path& fit_dir, int m, double eta, bool eta_given,
               int restarts, std::uint64_t seed, const fs::path& out_dir,
               bool deterministic) {
    ensure_dir(out_dir);
    ManifestWriter manifest("detect", deterministic);

    const fs::path b_path = fit_dir / "B_hat.csv";
    const fs::path a_path = fit_dir / "A_hat.csv";
    if (!fs::exists(b_path) || !fs::exists(a_path))
        throw sne::io::ParseError("missing fit artifacts in " + fit_dir.string());
    manifest.add_input(b_path);
    manifest.add_input(a_path);

    const Eigen::MatrixXd B = sne::io::read_matrix_csv(b_path);
    const Eigen::MatrixXd A = sne::io::read_matrix_csv(a_path);
    const int n = static_cast<int>(B.rows());

    const auto assign = sne::kmeans_embed(B, m, restarts, seed);
    const Eigen::MatrixXd S = sne::anomaly_scores(A);
    if (!eta_given) eta = sne::default_eta(S);
    const auto report = sne::threshold_anomalies(S, eta);

    sne::io::write_labels_csv(out_dir / "labels.csv", assign.labels);
    {
        std::ofstream out(out_dir / "anomalies.csv");
        out << "i,j,s\n";
        for (const auto& [i, j] : report.flagged)
            out << i << ',' << j << ',' << sne::io::format_double(S(i, j)) << '\n';
    }
    {
        std::ofstream out(out_dir / "eta.json");
        out << json{{"eta", eta}, {"source", eta_given ? "given" : "median"}}.dump(2)
            << '\n';
    }

    // heatmap: L reordered so nodes of the same community are adjacent
    sne::EmbeddingState state{B, A, {}};
    const Eigen::MatrixXd L = sne::latent_matrix(state).L;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return assign.labels[a] < assign.labels[b];
    });
    Eigen::MatrixXd L_sorted(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) L_sorted(i, j) = L(order[i], order[j]);
    sne::io::write_matrix_csv(out_dir / "heatmap_L.csv", L_sorted);

    // boxplot groups: thresholded s for within-community negative edges and
    // cross-community positive edges; needs the network if available
    {
        std::ofstream out(out_dir / "boxplot_s.csv");
        out << "group,i,j,s_tilde\n";
        fs::path edges_path;
        std::ifstream mf(fit_dir / "manifest.json");
        if (mf) {
            json fit_manifest;
            mf >> fit_manifest;
            if (fit_manifest.contains("edges"))
                edges_path = fit_manifest["edges"].get<std::string>();
        }
        if (!edges_path.empty() && fs::exists(edges_path)) {
            manifest.add_input(edges_path);
            const sne::SignedNetwork Y = sne::io::read_edge_list(edges_path);
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    if (std::abs(S(i, j)) <= eta) continue;
                    const bool same = assign.labels[i] == assign.labels[j];
                    const int y = Y.entry(i, j);
                    if (same && y == -1)
                        out << "within_negative," << i << ',' << j << ','
                            << sne::io::format_double(S(i, j)) << '\n';
                    else if (!same && y == 1)
                        out << "cross_positive," << i << ',' << j << ','
                            << sne::io::format_double(S(i, j)) << '\n';
                }
            }
        }
    }

    manifest.j["config"] = {{"m", m}, {"eta", eta}, {"restarts", restarts}};
    manifest.j["seed"] = seed;
    for (const char* f : {"labels.csv", "anomalies.csv", "eta.json", "heatmap_L.csv",
                          "boxplot_s.csv"})
        manifest.add_output(out_dir / f);
    manifest.write(out_dir);
    return kOk;
}

int cmd_select(const fs::path& edges_path, int m_min, int m_max,
               const std::string& config_path, const fs::path& out_dir,
               bool deterministic) {
    ensure_dir(out_dir);
    ManifestWriter manifest("select", deterministic);
    manifest.add_input(edges_path);

    const sne::SignedNetwork Y = sne::io::read_edge_list(edges_path);
    const sne::FitConfig cfg = load_config(config_path);
    manifest.j["config"] = config_snapshot(cfg);
    manifest.j["seed"] = cfg.seed;

    std::vector<int> grid;
    for (int m = m_min; m <= m_max; ++m) grid.push_back(m);
    const auto sel = sne::select_m(Y, grid, cfg, sne::LinkFunction::logit());

    {
        std::ofstream out(out_dir / "selection.csv");
        out << "m,score,negLL,df\n";
        for (const auto& cs : sel.scores) {
            out << cs.m << ',';
            if (cs.failed) out << "failed,failed,";
            else
                out << sne::io::format_double(cs.score) << ','
                    << sne::io::format_double(cs.neg_log_lik) << ',';
            out << sne::io::format_double(cs.df) << '\n';
        }
    }
    {
        std::ofstream out(out_dir / "chosen_m.json");
        out << json{{"chosen_m", sel.chosen_m}}.dump(2) << '\n';
    }
    manifest.add_output(out_dir / "selection.csv");
    manifest.add_output(out_dir / "chosen_m.json");
    manifest.write(out_dir);
    return kOk;
}

struct CellResult {
    int n = 0;
    double a_n = 0.0;
    std::vector<double> comm_errors;
    std::vector<double> fdps;
    int failures = 0;
};

void run_cell(int example, CellResult& cell, int reps, std::uint64_t master_seed,
              std::size_t cell_index, double eta) {
    for (int r = 0; r < reps; ++r) {
        const std::uint64_t seed =
            master_seed + 0x9e3779b97f4a7c15ULL * (cell_index + 1) + r;
        try {
            auto inst = example == 1 ? sne::gen_example1(cell.n, cell.a_n, seed)
                                     : sne::gen_example2(cell.n, cell.a_n, seed);
            sne::FitConfig cfg;
            cfg.K1 = 3;
            cfg.K2 = 3;
            cfg.a_n = cell.a_n;
            cfg.seed = seed;
            const auto res = sne::fit(inst.network, cfg, sne::LinkFunction::logit());

            const auto assign = sne::kmeans_embed(res.state.B, 4, 50, seed);
            const auto err =
                sne::community_error(inst.truth.labels, assign.labels, 4);
            cell.comm_errors.push_back(err.overall);

            const Eigen::MatrixXd S = sne::anomaly_scores(res.state.A);
            const auto report = sne::threshold_anomalies(S, eta);
            cell.fdps.push_back(sne::false_discovery_proportion(
                report.flagged, inst.truth.S_star_support));
        } catch (const sne::DivergenceError&) {
            cell.failures++;
        }
    }
}

std::pair<double, double> mean_se(const std::vector<double>& xs) {
    if (xs.empty()) return {std::nan(""), std::nan("")};
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= xs.size();
    if (xs.size() < 2) return {mean, 0.0};
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= (xs.size() - 1);
    return {mean, std::sqrt(var / xs.size())};
}

int cmd_benchmark(int example, const std::vector<int>& n_list,
                  const std::vector<double>& a_list, int reps,
                  std::uint64_t master_seed, int jobs, double eta,
                  const fs::path& out_dir, bool deterministic) {
    ensure_dir(out_dir);
    ManifestWriter manifest("benchmark", deterministic);
    manifest.j["config"] = {{"example", example}, {"n_list", n_list},
                            {"a_list", a_list}, {"reps", reps}, {"jobs", jobs},
                            {"eta", eta}};
    manifest.j["seed"] = master_seed;

    std::vector<CellResult> cells;
    for (int n : n_list)
        for (double a : a_list) cells.push_back({n, a, {}, {}, 0});

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= cells.size()) return;
            run_cell(example, cells[c], reps, master_seed, c, eta);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::ofstream t1(out_dir / "table1_like.csv");
    t1 << "example,n,a_n,reps,comm_error_mean,comm_error_se,failures\n";
    std::ofstream t3(out_dir / "table3_like.csv");
    t3 << "example,n,a_n,reps,fdp_mean,fdp_se,failures\n";
    for (const auto& cell : cells) {
        const auto [cm, cs] = mean_se(cell.comm_errors);
        const auto [fm, fsd] = mean_se(cell.fdps);
        t1 << example << ',' << cell.n << ',' << sne::io::format_double(cell.a_n)
           << ',' << reps << ',' << sne::io::format_double(cm) << ','
           << sne::io::format_double(cs) << ',' << cell.failures << '\n';
        t3 << example << ',' << cell.n << ',' << sne::io::format_double(cell.a_n)
           << ',' << reps << ',' << sne::io::format_double(fm) << ','
           << sne::io::format_double(fsd) << ',' << cell.failures << '\n';
    }
    manifest.add_output(out_dir / "table1_like.csv");
    manifest.add_output(out_dir / "table3_like.csv");
    manifest.write(out_dir);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signed-network embedding toolkit"};
    app.require_subcommand(1);
    bool deterministic = false;
    app.add_flag("--deterministic", deterministic,
                 "omit wall-clock fields so reruns are byte-identical");

    // generate
    auto* gen = app.add_subcommand("generate", "generate a synthetic network");
    int g_example = 1, g_n = 200;
    double g_a = 0.1, g_d0 = 1.0, g_d1 = -1.0;
    std::uint64_t g_seed = 0;
    std::string g_out;
    gen->add_option("--example", g_example)->check(CLI::Range(1, 2));
    gen->add_option("--n", g_n)->required();
    gen->add_option("--a-n", g_a);
    gen->add_option("--seed", g_seed);
    gen->add_option("--d0", g_d0);
    gen->add_option("--d1", g_d1);
    gen->add_option("--out", g_out)->required();

    // fit
    auto* fitc = app.add_subcommand("fit", "fit the embedding model");
    std::string f_edges, f_config, f_out;
    fitc->add_option("--edges", f_edges)->required();
    fitc->add_option("--config", f_config);
    fitc->add_option("--out", f_out)->required();

    // detect
    auto* det = app.add_subcommand("detect", "communities and anomalies from a fit");
    std::string d_fit, d_out;
    int d_m = 4, d_restarts = 50;
    double d_eta = 0.0;
    std::uint64_t d_seed = 0;
    det->add_option("--fit-dir", d_fit)->required();
    det->add_option("--m", d_m)->required();
    auto* eta_opt = det->add_option("--eta", d_eta);
    det->add_option("--restarts", d_restarts);
    det->add_option("--seed", d_seed);
    det->add_option("--out", d_out)->required();

    // select
    auto* sel = app.add_subcommand("select", "choose the community count by BIC");
    std::string s_edges, s_config, s_out;
    int s_min = 2, s_max = 6;
    sel->add_option("--edges", s_edges)->required();
    sel->add_option("--m-min", s_min)->required();
    sel->add_option("--m-max", s_max)->required();
    sel->add_option("--config", s_config);
    sel->add_option("--out", s_out)->required();

    // benchmark
    auto* bench = app.add_subcommand("benchmark", "replication grid");
    int b_example = 1, b_reps = 20, b_jobs = 1;
    double b_eta = 0.3;
    std::uint64_t b_seed = 0;
    std::vector<int> b_n{200};
    std::vector<double> b_a{0.0};
    std::string b_out;
    bench->add_option("--example", b_example)->check(CLI::Range(1, 2));
    bench->add_option("--n", b_n);
    bench->add_option("--a-n", b_a);
    bench->add_option("--reps", b_reps);
    bench->add_option("--seed", b_seed);
    bench->add_option("--jobs", b_jobs);
    bench->add_option("--eta", b_eta);
    bench->add_option("--out", b_out)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen)
            return cmd_generate(g_example, g_n, g_a, g_seed, g_d0, g_d1, g_out,
                                deterministic);
        if (*fitc) return cmd_fit(f_edges, f_config, f_out, deterministic);
        if (*det)
            return cmd_detect(d_fit, d_m, d_eta, eta_opt->count() > 0, d_restarts,
                              d_seed, d_out, deterministic);
        if (*sel) return cmd_select(s_edges, s_min, s_max, s_config, s_out,
                                    deterministic);
        if (*bench)
            return cmd_benchmark(b_example, b_n, b_a, b_reps, b_seed, b_jobs, b_eta,
                                 b_out, deterministic);
    } catch (const sne::io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const sne::DivergenceError& e) {
        std::cerr << "divergence: " << e.what() << '\n';
        return kDivergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    }
    return kOk;
}
