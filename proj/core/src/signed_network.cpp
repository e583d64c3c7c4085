#include "sne/signed_network.hpp"

#include <stdexcept>

namespace sne {

SignedNetwork::SignedNetwork(int n) : n_(n), entries_(Eigen::MatrixXi::Zero(n, n)) {
    if (n < 1) throw std::invalid_argument("SignedNetwork: n must be positive");
}

SignedNetwork SignedNetwork::from_dense(const Eigen::MatrixXi& Y) {
    if (Y.rows() != Y.cols())
        throw std::invalid_argument("SignedNetwork: matrix must be square");
    SignedNetwork net(static_cast<int>(Y.rows()));
    for (int i = 0; i < net.n_; ++i) {
        if (Y(i, i) != 0)
            throw std::invalid_argument("SignedNetwork: nonzero diagonal");
        for (int j = i + 1; j < net.n_; ++j) {
            if (Y(i, j) != Y(j, i))
                throw std::invalid_argument("SignedNetwork: matrix not symmetric");
            net.set(i, j, Y(i, j));
        }
    }
    return net;
}

void SignedNetwork::set(int i, int j, int sign) {
    if (i == j) throw std::invalid_argument("SignedNetwork: no self-edges");
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::out_of_range("SignedNetwork: node index out of range");
    if (sign < -1 || sign > 1)
        throw std::invalid_argument("SignedNetwork: sign must be in {-1,0,1}");
    entries_(i, j) = sign;
    entries_(j, i) = sign;
}

std::vector<SignedNetwork::Edge> SignedNetwork::edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (entries_(i, j) != 0) out.push_back({i, j, entries_(i, j)});
    return out;
}

} // namespace sne
