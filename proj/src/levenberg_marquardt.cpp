#include "softgrip/levenberg_marquardt.hpp"

#include <algorithm>
#include <cmath>

namespace softgrip {

LmResult levenberg_marquardt(const ResidualFn& residuals, const JacobianFn& jacobian,
                             Eigen::VectorXd x0, const LmOptions& opts) {
    LmResult out;
    out.x = std::move(x0);
    Eigen::VectorXd r = residuals(out.x);
    out.cost = r.squaredNorm();
    out.initial_cost = out.cost;

    const Eigen::Index n = out.x.size();
    if (n == 0) {
        out.converged = true;
        return out;
    }

    double lambda = opts.initial_lambda;
    while (out.iterations < opts.max_iterations) {
        ++out.iterations;
        const Eigen::MatrixXd J = jacobian(out.x, r);
        const Eigen::VectorXd g = J.transpose() * r;
        if (g.lpNorm<Eigen::Infinity>() < opts.grad_tol) {
            out.converged = true;
            return out;
        }
        const Eigen::MatrixXd A = J.transpose() * J;
        Eigen::VectorXd scale = A.diagonal();
        const double floor = std::max(scale.maxCoeff(), 1.0) * 1e-12;
        for (Eigen::Index i = 0; i < n; ++i) scale(i) = std::max(scale(i), floor);

        bool accepted = false;
        while (!accepted) {
            if (lambda > opts.max_lambda) return out;  // singular after escalation

            Eigen::MatrixXd damped = A;
            damped.diagonal() += lambda * scale;
            const Eigen::VectorXd step = damped.ldlt().solve(-g);
            if (!step.allFinite()) {
                lambda *= 10.0;
                continue;
            }
            const Eigen::VectorXd trial = out.x + step;
            const Eigen::VectorXd r_trial = residuals(trial);
            const double cost_trial = r_trial.allFinite() ? r_trial.squaredNorm() : HUGE_VAL;
            if (cost_trial < out.cost) {
                const double decrease = (out.cost - cost_trial) / out.cost;
                out.x = trial;
                r = r_trial;
                out.cost = cost_trial;
                lambda = std::max(lambda / 10.0, 1e-12);
                accepted = true;
                if (decrease < opts.rel_cost_tol) {
                    out.converged = true;
                    return out;
                }
            } else {
                lambda *= 10.0;
            }
        }
    }
    return out;
}

}  // namespace softgrip
