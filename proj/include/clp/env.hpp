#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clp/matrix.hpp"
#include "clp/weightings.hpp"

namespace clp {

// Row-stochastic policy over actions with full support (finite KL to it).
struct ReferencePolicy {
  Matrix probs;  // [num_contexts, num_actions]
};

void validate_reference_policy(const ReferencePolicy& ref);

// Finite multi-reward contextual bandit: the desk-scale stand-in for
// prompt -> generation.
struct BanditEnv {
  int num_contexts = 0;
  int num_actions = 0;
  int m = 0;                           // number of rewards
  std::vector<double> rewards;         // [x][a][i] row-major
  std::vector<double> context_dist;    // [num_contexts]
  Matrix context_features;             // [num_contexts, d]; one-hot by default
  ReferencePolicy ref;
  uint64_t seed = 0;

  double reward(int x, int a, int i) const {
    return rewards[(static_cast<size_t>(x) * num_actions + a) * m + i];
  }
  double& reward(int x, int a, int i) {
    return rewards[(static_cast<size_t>(x) * num_actions + a) * m + i];
  }
  // Reward matrix [num_contexts, num_actions] for a single reward index.
  Matrix reward_slice(int i) const;
};

void validate_env(const BanditEnv& env);

// The one-context, three-action instance where intermediate weightings
// demand qualitatively new behavior: R1 = (1, 0, 0.75), R2 = (0, 1, 0.75),
// uniform reference.
BanditEnv counterexample_env();

// Rewards i.i.d. uniform on [0,1]; uniform context distribution and
// reference; one-hot features. Deterministic given seed.
BanditEnv random_env(int num_contexts, int num_actions, int m, uint64_t seed);

// Replaces one-hot features with dense N(0,1) features of width d.
void set_random_features(BanditEnv& env, int feature_dim, uint64_t seed);

// Linear scalarization: out[x,a] = sum_i w[i] * rewards[x,a,i].
Matrix scalarize(const BanditEnv& env, const RewardWeights& w);

// Structured-text serialization with exact decimal round-trip.
std::string env_to_text(const BanditEnv& env);
BanditEnv env_from_text(const std::string& text);
void save_env(const BanditEnv& env, const std::string& path);
BanditEnv load_env(const std::string& path);

}  // namespace clp
