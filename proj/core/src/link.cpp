#include "sne/link.hpp"

#include <cmath>
#include <stdexcept>

namespace sne {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

double logistic(double x) {
    // split by sign to avoid overflow in exp
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

} // namespace

double LinkFunction::value(double x) const {
    switch (kind) {
        case LinkKind::Logit:
            return logistic(x);
        case LinkKind::Probit:
            return 0.5 * std::erfc(-x * kInvSqrt2);
    }
    return 0.0;
}

double LinkFunction::deriv(double x) const {
    switch (kind) {
        case LinkKind::Logit: {
            const double f = logistic(x);
            return f * (1.0 - f);
        }
        case LinkKind::Probit:
            return kInvSqrt2Pi * std::exp(-0.5 * x * x);
    }
    return 0.0;
}

LinkFunction LinkFunction::parse(const std::string& name) {
    if (name == "logit") return logit();
    if (name == "probit") return probit();
    throw std::invalid_argument("unknown link function: " + name);
}

std::string LinkFunction::name() const {
    return kind == LinkKind::Logit ? "logit" : "probit";
}

} // namespace sne
