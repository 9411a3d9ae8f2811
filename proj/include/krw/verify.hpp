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

#include "krw/parallel.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace krw {

/// Outcome of checking one identity at one parameter set. Every numeric
/// payload is an exact rational string; a failing report always carries the
/// first counterexample found (in a fixed scan order).
struct VerifyReport {
    struct Counterexample {
        std::vector<std::pair<std::string, std::string>> inputs;
        std::string expected;
        std::string actual;
    };

    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = true;
    std::optional<Counterexample> counterexample;

    friend bool operator==(const VerifyReport& a, const VerifyReport& b);
};

/// The fixed identity set, lexicographically sorted.
const std::vector<std::string>& identity_names();

/// One identity at one N. For "kummer" this sweeps a in {-N..0, 1, 2, 3};
/// for "pade" it checks every pair with n + m = N. Unknown names throw
/// std::invalid_argument.
VerifyReport verify_identity(const std::string& name, int N);

/// The truncated Kummer transformation at a single top parameter.
VerifyReport verify_kummer(long a, int N);

/// Every identity for N = 1..nmax, one report per (identity, N), ordered by
/// identity name then N regardless of how the cells were executed.
std::vector<VerifyReport> verify_all(int nmax, Exec exec = Exec::parallel);

} // namespace krw
