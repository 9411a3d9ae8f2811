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

#include <cstdint>

namespace krw {

enum class Exec { serial, parallel };

/// Runs body(i) for i = 0..count-1. The body must be pure with respect to
/// shared state except for writes to slots owned by index i, and must not
/// throw when exec == parallel.
template <typename F>
void parallel_for(std::int64_t count, F&& body, Exec exec = Exec::parallel) {
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
#else
    (void)exec;
#endif
    for (std::int64_t i = 0; i < count; ++i) {
        body(i);
    }
}

int worker_count();

} // namespace krw
