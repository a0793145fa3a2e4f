#pragma once

#include <functional>

#include <Eigen/Dense>

namespace softgrip {

struct LmOptions {
    int max_iterations = 500;
    /// Converged once an accepted step lowers the cost by less than this fraction.
    double rel_cost_tol = 1e-10;
    /// Converged once ||J^T r||_inf falls below this.
    double grad_tol = 1e-8;
    double initial_lambda = 1e-3;
    /// Damping beyond this is treated as a singular problem.
    double max_lambda = 1e16;
};

struct LmResult {
    Eigen::VectorXd x;
    double initial_cost = 0.0;  // sum of squared residuals
    double cost = 0.0;
    int iterations = 0;
    bool converged = false;
};

using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
/// Jacobian at x; r is the residual vector already evaluated at x.
using JacobianFn =
    std::function<Eigen::MatrixXd(const Eigen::VectorXd& x, const Eigen::VectorXd& r)>;

/**
 * Damped Gauss-Newton with Marquardt diagonal scaling. A step is accepted
 * only if it lowers the cost, so the returned cost never exceeds the
 * starting cost. Running out of damping headroom ends the iteration with
 * converged = false rather than throwing.
 */
LmResult levenberg_marquardt(const ResidualFn& residuals, const JacobianFn& jacobian,
                             Eigen::VectorXd x0, const LmOptions& opts = {});

}  // namespace softgrip
