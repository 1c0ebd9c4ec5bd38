// Copyright 2026 The fecsim Authors. All rights reserved.
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

#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace fecsim {

enum ExitStatus : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitSimulation = 2,
  kExitUsage = 3,
};

// Entry point of the `fecsim` tool. args[0] is the program name.
//
//   fecsim validate <config>
//   fecsim simulate <config> --scenario NAME --out DIR
//                   [--sample-interval-s N] [--format csv|json]
//   fecsim compare  <config> --baseline A --variant B --out DIR
//                   [--sample-interval-s N] [--k-cycle K]
int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace fecsim
