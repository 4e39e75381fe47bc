#pragma once

#include <stdexcept>
#include <string>

namespace nlosc {

// Invalid argument, parameter pole, or singular denominator.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Iterative evaluation failed to meet its tail bound within the hard cap,
// or two independent evaluation routes disagreed beyond tolerance.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nlosc
