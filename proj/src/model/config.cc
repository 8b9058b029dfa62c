/*
 * Copyright 2026 The edgeood Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "edge/model/config.h"

#include <string>

#include "edge/core/config_reader.h"
#include "edge/core/status.h"

namespace edge::model {

void EdgeConfig::Validate() const {
  auto fail = [](const std::string& what) { throw ParameterError("config: " + what); };
  if (!(alpha >= 0.0)) fail("alpha must be >= 0");
  if (!(beta >= 0.0)) fail("beta must be >= 0");
  if (!(margin >= 0.0)) fail("margin must be >= 0");
  if (k < 1) fail("k must be >= 1");
  if (epochs < 1) fail("epochs must be >= 1");
  if (transform_epoch > epochs) fail("transform_epoch must be <= epochs");
  if (batch_size < k) {
    fail("k=" + std::to_string(k) + " exceeds batch_size=" +
         std::to_string(batch_size));
  }
  if (!(learning_rate > 0.0)) fail("learning_rate must be > 0");
  if (!(momentum >= 0.0 && momentum < 1.0)) fail("momentum must be in [0, 1)");
  if (!(weight_decay >= 0.0)) fail("weight_decay must be >= 0");
  if (hidden_dim < 1) fail("d1 must be >= 1");
}

nlohmann::json ToJson(const EdgeConfig& c) {
  return {{"alpha", c.alpha},
          {"beta", c.beta},
          {"margin", c.margin},
          {"k", c.k},
          {"epochs", c.epochs},
          {"transform_epoch", c.transform_epoch},
          {"batch_size", c.batch_size},
          {"learning_rate", c.learning_rate},
          {"momentum", c.momentum},
          {"weight_decay", c.weight_decay},
          {"seed", c.seed},
          {"d1", c.hidden_dim}};
}

EdgeConfig EdgeConfigFromJson(const nlohmann::json& j) {
  const ConfigReader r(j, "edge config",
                       {"alpha", "beta", "margin", "k", "epochs",
                        "transform_epoch", "batch_size", "learning_rate",
                        "momentum", "weight_decay", "seed", "d1"});
  EdgeConfig c;
  c.alpha = r.Real("alpha");
  c.beta = r.Real("beta");
  c.margin = r.Real("margin");
  c.k = r.Unsigned("k");
  c.epochs = r.Unsigned("epochs");
  c.transform_epoch = r.Unsigned("transform_epoch");
  c.batch_size = r.Unsigned("batch_size");
  c.learning_rate = r.Real("learning_rate");
  c.momentum = r.Real("momentum");
  c.weight_decay = r.Real("weight_decay");
  c.seed = r.Unsigned("seed");
  c.hidden_dim = r.Unsigned("d1");
  c.Validate();
  return c;
}

}  // namespace edge::model
