#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "fedcomp/types.hpp"

namespace fedcomp {

//! Per-step weight alpha_t = (t + a)^2.
double weight_alpha(std::int64_t t, std::int64_t a);

//! A_T = sum_{t=0}^{T} (t + a)^2, evaluated in closed form.
//!
//! All intermediate values are exact integers below 2^53, so this matches a
//! running sum of weight_alpha bit for bit at the scales the simulator runs.
double weight_sum(std::int64_t T, std::int64_t a);

//! Shared hyperparameter record for the dual-averaging family.
//!
//! a and gamma default to the schedule ceil(4L/mu) and 2*mu*a^3 when left
//! unset (zero). client_weights empty means uniform 1/K.
struct AlgoHyperparams {
  double mu = 0.1;
  double L = 0.1;
  std::int64_t a = 0;   // 0 = auto
  double gamma = 0.0;   // 0 = auto
  double lambda = 0.0;
  int local_steps = 1;  // E
  int rounds = 1;       // R
  Eigen::VectorXd client_weights;

  //! Fill defaults for K clients and validate; returns the resolved copy.
  AlgoHyperparams resolved(int num_clients) const;
};

}  // namespace fedcomp
