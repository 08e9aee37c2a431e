#pragma once

#include <Eigen/Core>

#include <functional>

namespace arcroll::optim {

using Objective = std::function<double(const Eigen::VectorXd&)>;

struct NelderMeadOptions {
  double initial_step = 0.5;  // edge length of the starting simplex
  double f_tol = 1e-16;       // stop when the spread of simplex values drops below this...
  double x_tol = 1e-10;       // ...and the simplex diameter below this
  int max_iterations = 20000;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double f = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

// Downhill simplex with dimension-adaptive coefficients (Gao & Han 2012),
// which behaves better than the classic 1/2/0.5/0.5 set beyond a few dimensions.
NelderMeadResult nelder_mead(const Objective& f, const Eigen::VectorXd& x0,
                             const NelderMeadOptions& opts = {});

}  // namespace arcroll::optim
