#pragma once

#include <string>

namespace sne {

enum class LinkKind { Logit, Probit };

/// Increasing link function f mapping R -> (0,1), with derivative.
struct LinkFunction {
    LinkKind kind = LinkKind::Logit;

    double value(double x) const;
    double deriv(double x) const;

    static LinkFunction logit() { return {LinkKind::Logit}; }
    static LinkFunction probit() { return {LinkKind::Probit}; }
    static LinkFunction parse(const std::string& name);
    std::string name() const;
};

} // namespace sne
