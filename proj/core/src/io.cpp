#include "sne/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sne::io {

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_edge_list(const std::filesystem::path& path, const SignedNetwork& Y) {
    auto out = open_out(path);
    out << "i\tj\tsign\n";
    for (const auto& e : Y.edges()) out << e.i << '\t' << e.j << '\t' << e.sign << '\n';
}

SignedNetwork read_edge_list(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::string line;
    long lineno = 0;
    if (!std::getline(in, line)) throw ParseError("empty edge file: " + path.string());
    ++lineno;
    if (trim(line) != "i\tj\tsign")
        throw ParseError("bad edge-list header in " + path.string(), lineno);

    struct Rec { int i, j, sign; };
    std::vector<Rec> recs;
    int max_node = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        std::istringstream ss(line);
        Rec r{};
        if (!(ss >> r.i >> r.j >> r.sign))
            throw ParseError("malformed edge record in " + path.string(), lineno);
        if (r.i < 0 || r.j < 0 || r.i >= r.j)
            throw ParseError("edge record must have 0 <= i < j", lineno);
        if (r.sign != -1 && r.sign != 1)
            throw ParseError("edge sign must be -1 or 1", lineno);
        max_node = std::max(max_node, r.j);
        recs.push_back(r);
    }
    SignedNetwork net(max_node + 1);
    for (const auto& r : recs) net.set(r.i, r.j, r.sign);
    return net;
}

void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXd& X) {
    auto out = open_out(path);
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
        for (Eigen::Index j = 0; j < X.cols(); ++j) {
            if (j) out << ',';
            out << format_double(X(i, j));
        }
        out << '\n';
    }
}

Eigen::MatrixXd read_matrix_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::vector<std::vector<double>> rows;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        std::vector<double> row;
        std::istringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw ParseError("bad numeric cell in " + path.string(), lineno);
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("ragged CSV in " + path.string(), lineno);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return {};
    Eigen::MatrixXd X(rows.size(), rows.front().size());
    for (Eigen::Index i = 0; i < X.rows(); ++i)
        for (Eigen::Index j = 0; j < X.cols(); ++j) X(i, j) = rows[i][j];
    return X;
}

void write_labels_csv(const std::filesystem::path& path, const std::vector<int>& labels) {
    auto out = open_out(path);
    out << "node,label\n";
    for (std::size_t i = 0; i < labels.size(); ++i) out << i << ',' << labels[i] << '\n';
}

std::vector<int> read_labels_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::string line;
    long lineno = 0;
    if (!std::getline(in, line) || trim(line) != "node,label")
        throw ParseError("bad labels header in " + path.string(), 1);
    ++lineno;
    std::vector<int> labels;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        int node = 0, label = 0;
        char comma = 0;
        std::istringstream ss(line);
        if (!(ss >> node >> comma >> label) || comma != ',')
            throw ParseError("malformed label record in " + path.string(), lineno);
        if (node != static_cast<int>(labels.size()))
            throw ParseError("label records out of order in " + path.string(), lineno);
        labels.push_back(label);
    }
    return labels;
}

void write_pairs_csv(const std::filesystem::path& path, const PairSet& pairs) {
    auto out = open_out(path);
    out << "i,j\n";
    for (const auto& [i, j] : pairs) out << i << ',' << j << '\n';
}

PairSet read_pairs_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::string line;
    long lineno = 1;
    if (!std::getline(in, line) || trim(line) != "i,j")
        throw ParseError("bad pairs header in " + path.string(), 1);
    PairSet pairs;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        int i = 0, j = 0;
        char comma = 0;
        std::istringstream ss(line);
        if (!(ss >> i >> comma >> j) || comma != ',')
            throw ParseError("malformed pair record in " + path.string(), lineno);
        pairs.insert({i, j});
    }
    return pairs;
}

std::map<std::string, std::string> read_key_values(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::map<std::string, std::string> kv;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key = value in " + path.string(), lineno);
        kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return kv;
}

FitConfig read_fit_config(const std::filesystem::path& path) {
    FitConfig cfg;
    for (const auto& [key, value] : read_key_values(path)) {
        try {
            if (key == "K1") cfg.K1 = std::stoi(value);
            else if (key == "K2") cfg.K2 = std::stoi(value);
            else if (key == "C") cfg.C = std::stod(value);
            else if (key == "kappa") cfg.kappa = std::stod(value);
            else if (key == "a_n") cfg.a_n = std::stod(value);
            else if (key == "xi1") cfg.xi1 = std::stod(value);
            else if (key == "xi2") cfg.xi2 = std::stod(value);
            else if (key == "xi3") cfg.xi3 = std::stod(value);
            else if (key == "xi4") cfg.xi4 = std::stod(value);
            else if (key == "max_iter") cfg.max_iter = std::stoi(value);
            else if (key == "tol") cfg.tol = std::stod(value);
            else if (key == "learn_intercepts") cfg.learn_intercepts = (value == "true" || value == "1");
            else if (key == "d0") cfg.intercepts.d0 = std::stod(value);
            else if (key == "d1") cfg.intercepts.d1 = std::stod(value);
            else if (key == "delta") cfg.intercepts.delta = std::stod(value);
            else if (key == "c1") cfg.intercepts.c1 = std::stod(value);
            else if (key == "c2") cfg.intercepts.c2 = std::stod(value);
            else if (key == "seed") cfg.seed = std::stoull(value);
            else if (key == "init") {
                if (value == "random") cfg.init = InitScheme::Random;
                else if (value == "spectral") cfg.init = InitScheme::Spectral;
                else throw ParseError("init must be random or spectral");
            } else {
                throw ParseError("unknown config key: " + key);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad value for config key " + key);
        }
    }
    return cfg;
}

} // namespace sne::io
