#pragma once

#include <span>
#include <string>
#include <vector>

#include "netsac/rng.hpp"
#include "netsac/spaces.hpp"

namespace netsac {

/// Tabular softmax policies, one per agent: zeta_i(a|s) is the softmax of the
/// logit row theta_i[s, .]. The joint policy is the product of the locals.
/// Tables are immutable in use; updates produce a new table.
class LocalizedPolicyTable {
 public:
  LocalizedPolicyTable() = default;

  /// All-zero logits, i.e. the uniform policy.
  static LocalizedPolicyTable uniform(const std::vector<LocalSpace>& spaces);

  int num_agents() const { return static_cast<int>(dims_.size()); }
  int state_size(int i) const { return dims_[i].state_size; }
  int action_size(int i) const { return dims_[i].action_size; }

  double logit(int i, int s, int a) const { return logits_[i][idx(i, s, a)]; }
  void set_logit(int i, int s, int a, double v) { logits_[i][idx(i, s, a)] = v; }

  /// Row-major logit matrix of agent i, size |S_i| * |A_i|.
  std::span<const double> logits(int i) const { return logits_[i]; }

  /// Softmax of row theta_i[s, .], computed with max-subtraction.
  std::vector<double> action_probs(int i, int s) const;
  void action_probs(int i, int s, std::span<double> out) const;

  /// log zeta_i(a|s) = theta[s,a] - logsumexp(row).
  double log_prob(int i, int s, int a) const;

  int sample_action(int i, int s, RngStream& rng) const;

  /// Score function d/dtheta_i log zeta_i(a|s): row s is e_a - zeta_i(.|s),
  /// all other rows zero. `out` has the shape of theta_i.
  void log_policy_grad(int i, int s, int a, std::span<double> out) const;

  /// JSON checkpoint; doubles serialized with 17 significant digits so the
  /// round-trip is bit-exact.
  void save(const std::string& path) const;
  static LocalizedPolicyTable load(const std::string& path);
  std::string to_json() const;
  static LocalizedPolicyTable from_json(const std::string& text);

 private:
  std::size_t idx(int i, int s, int a) const {
    return static_cast<std::size_t>(s) * dims_[i].action_size + a;
  }

  std::vector<LocalSpace> dims_;
  std::vector<std::vector<double>> logits_;

  friend LocalizedPolicyTable gradient_ascent_step(const LocalizedPolicyTable&,
                                                   const std::vector<std::vector<double>>&,
                                                   double);
};

/// theta_i(m+1) = theta_i(m) + eta_m * g_i(m). Functional update: returns a
/// new table. Gradient shapes must match the policy's logit matrices.
LocalizedPolicyTable gradient_ascent_step(const LocalizedPolicyTable& policy,
                                          const std::vector<std::vector<double>>& gradients,
                                          double eta_m);

/// Cached per-(agent, state) action distributions for a fixed policy.
/// Sampling and score lookups in the training loops go through this cache so
/// the softmax is evaluated once per outer iteration, not once per step.
class PolicySampler {
 public:
  explicit PolicySampler(const LocalizedPolicyTable& policy);

  int sample(int i, int s, RngStream& rng) const;
  std::span<const double> probs(int i, int s) const;

 private:
  std::vector<int> action_size_;
  std::vector<std::vector<double>> probs_;  // [i][s * |A_i| + a]
  std::vector<std::vector<double>> cdf_;
};

}  // namespace netsac
