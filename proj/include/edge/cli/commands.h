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

#ifndef EDGE_CLI_COMMANDS_H_
#define EDGE_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

#include "edge/core/status.h"
#include "json.hpp"

namespace edge::cli {

// Runs one command line; `args` excludes the program name. Returns 0 when
// every output was written and every check passed. Otherwise writes
// {"error": {"kind", "message"}} to `err` and returns nonzero: 2 for usage
// errors, 1 for everything else.
//
//   synth      --out DIR [--config SPEC.json] [--seed N]
//   train      --id DIR --out DIR [--oe DIR] [--config CFG.json] [--seed N]
//   score      --checkpoint FILE --dataset DIR --out DIR [--scores K1,K2]
//              [--bins N]
//   eval       --id-scores FILE --ood-scores FILE --out DIR [--labels FILE]
//              [--train DIR] [--kind K] [--tpr T] [--steps N]
//   select-oe  --id DIR --out DIR (--candidates D1,D2 | --distances FILE)
//              [--checkpoint FILE] [--d1 N] [--k-svd N] [--batches N]
//              [--batch-size N] [--seed N]
//   sweep      --grid FILE --id DIR --oe DIR --out DIR [--config CFG.json]
//              [--test DIR --ood DIR] [--kind K] [--tpr T] [--steps N]
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json ErrorJson(std::string_view kind, std::string_view message);

}  // namespace edge::cli

#endif  // EDGE_CLI_COMMANDS_H_
