// Copyright 2026 The Cotask Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COTASK_LEARNING_H_
#define COTASK_LEARNING_H_

#include <optional>

#include "cotask/rng.h"
#include "cotask/value.h"

namespace cotask {

// Payoff-based log-linear learning parameters. epsilon is the noise level;
// the per-cycle experimentation probability is epsilon^m_exponent. For
// reliable selection of the optimum, m_exponent should exceed the largest
// achievable utility.
struct LearnerParams {
  double epsilon = 0.01;
  double m_exponent = 1.0;

  friend bool operator==(const LearnerParams&, const LearnerParams&) = default;
};

// Per-robot learner state. `experimenting` marks that the action played in
// the cycle just finished was an experimental draw; `previous_*` track the
// incumbent (baseline) action and its last realized utility so the settle
// step can compare the two.
struct LearnerState {
  bool experimenting = false;
  int current_action = 0;
  int previous_action = 0;
  Value current_utility;
  Value previous_utility;
};

// Probability of reverting to the incumbent action given the realized
// utilities of the incumbent (u_prev) and of the experimental action
// (u_curr): epsilon^{-u_prev} / (epsilon^{-u_prev} + epsilon^{-u_curr}),
// evaluated as 1 / (1 + epsilon^{u_prev - u_curr}) so large utilities
// cannot overflow.
double revert_probability(double u_prev, double u_curr, double epsilon);

// Fresh non-experimenting learner. If initial_action is empty the action is
// drawn uniformly from [0, action_count).
LearnerState init_learner(int action_count, std::optional<int> initial_action,
                          RngStream& rng);

// One learner update, to be called after the cycle's realized utility has
// been stored in state.current_utility. Non-experimenting robots start an
// experiment with probability epsilon^m_exponent (uniform draw over the
// whole action set, current action included); experimenting robots settle
// on the experimental or the incumbent action by revert_probability.
// Returns the action to play next cycle.
int pbll_step(LearnerState& state, const LearnerParams& params, RngStream& rng,
              int action_count);

}  // namespace cotask

#endif  // COTASK_LEARNING_H_
