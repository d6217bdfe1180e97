#pragma once

#include <stdexcept>
#include <string>

namespace abspec {

// Argument hit a pole of the underlying function (gamma/polygamma family).
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// A series exceeded its term cap before the tail dropped below tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double tail)
        : std::runtime_error(what), tail_estimate(tail) {}
    double tail_estimate;
};

// Spectral parameter too close to an eigenvalue of the sector.
class NearEigenvalueError : public std::domain_error {
public:
    explicit NearEigenvalueError(const std::string& what) : std::domain_error(what) {}
};

// Bracketed root count disagrees with the localization table after grid refinement.
class CountMismatchError : public std::runtime_error {
public:
    CountMismatchError(const std::string& what, int found_, int predicted_)
        : std::runtime_error(what), found(found_), predicted(predicted_) {}
    int found;
    int predicted;
};

// The extension lies outside the Lambda-chart (singular Phi combination).
class ChartBoundaryError : public std::runtime_error {
public:
    explicit ChartBoundaryError(const std::string& what) : std::runtime_error(what) {}
};

// Matrix inversion or unitarity check failed beyond tolerance.
class ConditioningError : public std::runtime_error {
public:
    explicit ConditioningError(const std::string& what) : std::runtime_error(what) {}
};

// Requested kernel vector of a matrix that is numerically regular.
class KernelDimensionError : public std::runtime_error {
public:
    explicit KernelDimensionError(const std::string& what) : std::runtime_error(what) {}
};

// Parameter inversion with vanishing determinant.
class SingularParamsError : public std::domain_error {
public:
    explicit SingularParamsError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace abspec
