#include "sne/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace sne {

void Intercepts::validate() const {
    if (delta <= 0.0) throw std::invalid_argument("Intercepts: delta must be > 0");
    if (!(c1 <= d1 && d1 <= d0 - delta && d0 <= c2))
        throw std::invalid_argument("Intercepts: outside feasible box");
}

namespace {

// Mirrors the strict upper triangle onto the lower one so results are
// symmetric bit for bit.
void symmetrize_upper(Eigen::MatrixXd& X) {
    const int n = static_cast<int>(X.rows());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) X(j, i) = X(i, j);
}

} // namespace

LatentDecomposition latent_matrix(const EmbeddingState& state) {
    if (state.B.rows() != state.A.rows())
        throw std::invalid_argument("latent_matrix: B and A row counts differ");
    const int n = state.n();
    const Eigen::VectorXd sq = state.B.rowwise().squaredNorm();
    LatentDecomposition out;
    out.L = 2.0 * (state.B * state.B.transpose());
    out.L.colwise() -= sq;
    out.L.rowwise() -= sq.transpose();
    out.L.diagonal().setZero();
    out.S = state.A * state.A.transpose();
    symmetrize_upper(out.L);
    symmetrize_upper(out.S);
    out.M = out.L + out.S;
    return out;
}

Eigen::MatrixXd latent_m(const EmbeddingState& state) {
    if (state.B.rows() != state.A.rows())
        throw std::invalid_argument("latent_m: B and A row counts differ");
    const Eigen::VectorXd sq = state.B.rowwise().squaredNorm();
    Eigen::MatrixXd M = 2.0 * (state.B * state.B.transpose()) + state.A * state.A.transpose();
    M.colwise() -= sq;
    M.rowwise() -= sq.transpose();
    const Eigen::VectorXd sdiag = state.A.rowwise().squaredNorm();
    M.diagonal() = sdiag;
    symmetrize_upper(M);
    return M;
}

double survival(int t, double m, const Intercepts& d, const LinkFunction& link) {
    if (t <= -1) return 1.0;
    if (t >= 2) return 0.0;
    const double dt = (t == 0) ? d.d0 : d.d1;
    return link.value(dt + m);
}

double prob(int t, double m, const Intercepts& d, const LinkFunction& link) {
    if (d.d1 > d.d0)
        throw std::invalid_argument("prob: invalid intercepts (d1 > d0)");
    if (t < -1 || t > 1) throw std::invalid_argument("prob: t must be in {-1,0,1}");
    const double p = survival(t, m, d, link) - survival(t + 1, m, d, link);
    return std::clamp(p, kProbFloor, 1.0);
}

double prob_deriv(int t, double m, const Intercepts& d, const LinkFunction& link) {
    switch (t) {
        case -1: return -link.deriv(d.d0 + m);
        case 0: return link.deriv(d.d0 + m) - link.deriv(d.d1 + m);
        case 1: return link.deriv(d.d1 + m);
    }
    throw std::invalid_argument("prob_deriv: t must be in {-1,0,1}");
}

} // namespace sne
