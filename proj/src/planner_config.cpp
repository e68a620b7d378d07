// Copyright 2026 The lazysearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lazysearch/planner_config.hpp"

#include <cmath>
#include <stdexcept>

namespace lazysearch {

PlannerConfig PlannerConfig::normalized() const {
  PlannerConfig c = *this;
  if (!(c.epsilon1 >= 1.0) || !std::isfinite(c.epsilon1)) {
    throw std::invalid_argument("epsilon1 must be a finite value >= 1");
  }
  if (!(c.epsilon2 >= 1.0) || !std::isfinite(c.epsilon2)) {
    throw std::invalid_argument("epsilon2 must be a finite value >= 1");
  }
  if (c.policy == EvaluationPolicy::kEager) c.epsilon1 = 1.0;
  if (!c.truncation) c.epsilon2 = 1.0;
  return c;
}

PlannerConfig PlannerConfig::lazy_lifelong(Event event) {
  PlannerConfig c;
  c.event = event;
  return c;
}

PlannerConfig PlannerConfig::bounded_lazy_lifelong(double epsilon1, double epsilon2,
                                                   Event event) {
  PlannerConfig c;
  c.event = event;
  c.epsilon1 = epsilon1;
  c.epsilon2 = epsilon2;
  c.truncation = true;
  return c;
}

PlannerConfig PlannerConfig::from_scratch(Event event) {
  PlannerConfig c = lazy_lifelong(event);
  c.reset_between_queries = true;
  return c;
}

PlannerConfig PlannerConfig::eager_incremental() {
  PlannerConfig c;
  c.policy = EvaluationPolicy::kEager;
  return c;
}

PlannerConfig PlannerConfig::eager_truncated(double epsilon2) {
  PlannerConfig c = eager_incremental();
  c.truncation = true;
  c.epsilon2 = epsilon2;
  return c;
}

}  // namespace lazysearch
