#ifndef HBFLOW_ERRORS_HPP
#define HBFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hbflow {

/// Invalid user-supplied parameter (bad B, n, eps, grid size, ...).
/// CLI maps this family to exit code 2.
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Base for numerical-solver failures. CLI maps this family to exit code 3.
class solver_error : public std::runtime_error {
public:
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

/// A root bracket [lo, hi] does not enclose a sign change.
class bracket_error : public solver_error {
public:
    explicit bracket_error(const std::string& what) : solver_error(what) {}
};

/// Iteration cap reached; carries the best iterate found so far.
class convergence_error : public solver_error {
public:
    convergence_error(const std::string& what, double best)
        : solver_error(what), best_estimate(best) {}
    double best_estimate;
};

/// Adaptive quadrature could not reach the requested tolerance;
/// carries the partial estimate and its error bound.
class quadrature_error : public solver_error {
public:
    quadrature_error(const std::string& what, double partial, double err)
        : solver_error(what), partial_estimate(partial), error_estimate(err) {}
    double partial_estimate;
    double error_estimate;
};

} // namespace hbflow

#endif
