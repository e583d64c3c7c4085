#pragma once

#include <Eigen/Dense>

namespace sne {

/// Scales X to Frobenius norm c if ||X||_F > c, otherwise returns X.
Eigen::MatrixXd project_frobenius(const Eigen::MatrixXd& X, double c);

/// Scales the whole matrix so the max row norm is at most c.
Eigen::MatrixXd project_row_norm(const Eigen::MatrixXd& X, double c);

/// (I - basis (basis' basis)^-1 basis') X. Rank-deficient bases are handled
/// by a rank-revealing solve that drops null directions.
Eigen::MatrixXd project_complement(const Eigen::MatrixXd& basis,
                                   const Eigen::MatrixXd& X);

/// J_n X with J_n = I - 11'/n: subtracts each column mean.
Eigen::MatrixXd center_columns(const Eigen::MatrixXd& X);

/// min(max(x, a), b). Throws if a > b.
double clamp_interval(double x, double a, double b);

} // namespace sne
