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

#include "cotask/learning.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cotask {

namespace {

void check_params(const LearnerParams& params) {
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(params.m_exponent > 0.0))
    throw std::invalid_argument("m_exponent must be positive");
}

}  // namespace

double revert_probability(double u_prev, double u_curr, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  // pow may round to 0 or +inf for extreme utility gaps; both give the
  // correct limiting probability.
  return 1.0 / (1.0 + std::pow(epsilon, u_prev - u_curr));
}

LearnerState init_learner(int action_count, std::optional<int> initial_action,
                          RngStream& rng) {
  if (action_count < 1)
    throw std::invalid_argument("learner needs a non-empty action set");
  int action;
  if (initial_action) {
    if (*initial_action < 0 || *initial_action >= action_count)
      throw std::invalid_argument(
          "initial action " + std::to_string(*initial_action) +
          " outside [0, " + std::to_string(action_count - 1) + "]");
    action = *initial_action;
  } else {
    action = static_cast<int>(rng.uniform_below(action_count));
  }
  LearnerState state;
  state.current_action = action;
  state.previous_action = action;
  return state;
}

int pbll_step(LearnerState& state, const LearnerParams& params, RngStream& rng,
              int action_count) {
  check_params(params);
  if (state.current_action < 0 || state.current_action >= action_count ||
      state.previous_action < 0 || state.previous_action >= action_count)
    throw std::invalid_argument("learner action index out of range");

  if (!state.experimenting) {
    if (rng.uniform01() < std::pow(params.epsilon, params.m_exponent)) {
      // Snapshot the incumbent and try a uniform draw for one cycle.
      state.previous_action = state.current_action;
      state.previous_utility = state.current_utility;
      state.current_action = static_cast<int>(rng.uniform_below(action_count));
      state.experimenting = true;
    }
  } else {
    state.experimenting = false;
    const double alpha =
        revert_probability(state.previous_utility.as_double(),
                           state.current_utility.as_double(), params.epsilon);
    if (rng.uniform01() < alpha) {
      state.current_action = state.previous_action;
      state.current_utility = state.previous_utility;
    } else {
      state.previous_action = state.current_action;
      state.previous_utility = state.current_utility;
    }
  }
  return state.current_action;
}

}  // namespace cotask
