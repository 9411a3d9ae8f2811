/*
   Copyright 2026 The krw authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace krw {

// Grammar:
//   krw <eval|table|eigvec|model|pade|verify|verify-all>
//       [--n INT] [--k INT] [--N INT] [--m INT] [--a INT]
//       [--adjoint] [--format json|csv]
//
// Exit codes: 0 success / identity passes, 1 identity failure (report carries
// the counterexample), 2 usage error. KRW_NMAX sets the default verify-all
// bound (12 when unset).

/// Runs the command line given by args (without the program name), writing
/// results to out and diagnostics to err; returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace krw
