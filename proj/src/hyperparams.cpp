#include "fedcomp/hyperparams.hpp"

#include <cmath>

namespace fedcomp {

double weight_alpha(std::int64_t t, std::int64_t a) {
  if (t < 0) throw ConfigError("weight_alpha: t must be nonnegative");
  if (a < 1) throw ConfigError("weight_alpha: a must be positive");
  const double base = static_cast<double>(t + a);
  return base * base;
}

namespace {
// sum_{u=1}^{n} u^2
std::uint64_t square_pyramid(std::uint64_t n) {
  return n * (n + 1) * (2 * n + 1) / 6;
}
}  // namespace

double weight_sum(std::int64_t T, std::int64_t a) {
  if (T < 0) throw ConfigError("weight_sum: T must be nonnegative");
  if (a < 1) throw ConfigError("weight_sum: a must be positive");
  const auto hi = static_cast<std::uint64_t>(T + a);
  const auto lo = static_cast<std::uint64_t>(a - 1);
  return static_cast<double>(square_pyramid(hi) - square_pyramid(lo));
}

AlgoHyperparams AlgoHyperparams::resolved(int num_clients) const {
  AlgoHyperparams h = *this;
  if (!(h.mu > 0)) throw ConfigError("hyperparams: mu must be positive");
  if (!(h.L >= h.mu)) throw ConfigError("hyperparams: L must satisfy L >= mu");
  if (h.lambda < 0) throw ConfigError("hyperparams: lambda must be nonnegative");
  if (h.local_steps < 1) throw ConfigError("hyperparams: local_steps must be >= 1");
  if (h.rounds < 1) throw ConfigError("hyperparams: rounds must be >= 1");
  if (h.a == 0) h.a = static_cast<std::int64_t>(std::ceil(4.0 * h.L / h.mu));
  if (h.a < 1) throw ConfigError("hyperparams: a must be positive");
  if (h.gamma == 0.0) {
    const double ad = static_cast<double>(h.a);
    h.gamma = 2.0 * h.mu * ad * ad * ad;
  }
  if (!(h.gamma > 0)) throw ConfigError("hyperparams: gamma must be positive");
  if (h.client_weights.size() == 0) {
    h.client_weights =
        Eigen::VectorXd::Constant(num_clients, 1.0 / num_clients);
  }
  if (h.client_weights.size() != num_clients) {
    throw ConfigError("hyperparams: client_weights size does not match K");
  }
  if (h.client_weights.minCoeff() < 0) {
    throw ConfigError("hyperparams: client_weights must be nonnegative");
  }
  if (std::abs(h.client_weights.sum() - 1.0) > 1e-12) {
    throw ConfigError("hyperparams: client_weights must sum to 1 (within 1e-12)");
  }
  return h;
}

}  // namespace fedcomp
