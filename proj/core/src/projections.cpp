#include "sne/projections.hpp"

#include <stdexcept>

namespace sne {

Eigen::MatrixXd project_frobenius(const Eigen::MatrixXd& X, double c) {
    if (c < 0.0) throw std::invalid_argument("project_frobenius: c must be >= 0");
    const double norm = X.norm();
    if (norm <= c || norm == 0.0) return X;
    return (c / norm) * X;
}

Eigen::MatrixXd project_row_norm(const Eigen::MatrixXd& X, double c) {
    if (c <= 0.0) throw std::invalid_argument("project_row_norm: c must be > 0");
    const double max_row = X.rowwise().norm().maxCoeff();
    if (max_row <= c) return X;
    return (c / max_row) * X;
}

Eigen::MatrixXd project_complement(const Eigen::MatrixXd& basis,
                                   const Eigen::MatrixXd& X) {
    if (basis.rows() != X.rows())
        throw std::invalid_argument("project_complement: row counts differ");
    // Rank-revealing QR drops numerically null basis columns.
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis);
    const Eigen::Index r = qr.rank();
    if (r == 0) return X;
    const Eigen::MatrixXd Q =
        qr.householderQ() * Eigen::MatrixXd::Identity(basis.rows(), r);
    return X - Q * (Q.transpose() * X);
}

Eigen::MatrixXd center_columns(const Eigen::MatrixXd& X) {
    return X.rowwise() - X.colwise().mean();
}

double clamp_interval(double x, double a, double b) {
    if (a > b) throw std::invalid_argument("clamp_interval: a > b");
    return x < a ? a : (x > b ? b : x);
}

} // namespace sne
