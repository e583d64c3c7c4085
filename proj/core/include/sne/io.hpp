#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sne/detection.hpp"
#include "sne/optimizer.hpp"
#include "sne/signed_network.hpp"

namespace sne::io {

/// Malformed input file; carries the offending line number when known.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg, long line = -1)
        : std::runtime_error(line >= 0 ? msg + " (line " + std::to_string(line) + ")"
                                       : msg),
          line_number(line) {}
    long line_number;
};

/// Formats a double with 17 significant digits (lossless round trip).
std::string format_double(double x);

/// Edge list: header "i\tj\tsign", 0-based ids, one record per unordered
/// pair with i < j and sign in {-1, 1}; absent pairs mean y = 0.
void write_edge_list(const std::filesystem::path& path, const SignedNetwork& Y);
SignedNetwork read_edge_list(const std::filesystem::path& path);

void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXd& X);
Eigen::MatrixXd read_matrix_csv(const std::filesystem::path& path);

void write_labels_csv(const std::filesystem::path& path, const std::vector<int>& labels);
std::vector<int> read_labels_csv(const std::filesystem::path& path);

void write_pairs_csv(const std::filesystem::path& path, const PairSet& pairs);
PairSet read_pairs_csv(const std::filesystem::path& path);

/// Flat "key = value" config mirroring FitConfig field names; unknown keys
/// are rejected.
FitConfig read_fit_config(const std::filesystem::path& path);
std::map<std::string, std::string> read_key_values(const std::filesystem::path& path);

} // namespace sne::io
