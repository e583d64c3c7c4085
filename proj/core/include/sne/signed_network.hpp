#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace sne {

/// Symmetric signed adjacency with entries in {-1, 0, +1} and zero diagonal.
class SignedNetwork {
public:
    explicit SignedNetwork(int n);

    /// Builds from a full matrix; throws if entries are not in {-1,0,1},
    /// the matrix is not symmetric, or the diagonal is nonzero.
    static SignedNetwork from_dense(const Eigen::MatrixXi& Y);

    int n() const { return n_; }
    int entry(int i, int j) const { return entries_(i, j); }

    /// Sets y_ij = y_ji = sign. sign must be in {-1,0,1}; i != j.
    void set(int i, int j, int sign);

    const Eigen::MatrixXi& dense() const { return entries_; }

    /// Unordered edge records (i < j, sign != 0).
    struct Edge { int i, j, sign; };
    std::vector<Edge> edges() const;

    bool operator==(const SignedNetwork& other) const {
        return entries_ == other.entries_;
    }

private:
    int n_;
    Eigen::MatrixXi entries_;
};

} // namespace sne
