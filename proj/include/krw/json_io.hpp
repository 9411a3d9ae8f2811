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

#include "krw/matrix.hpp"
#include "krw/poly.hpp"
#include "krw/rational.hpp"
#include "krw/verify.hpp"

#include "json.hpp"

#include <vector>

namespace krw {

// Exact serialization: every rational to its "p/q" (or "p") string, never a
// floating-point number. Laurent payloads carry their lowest exponent.

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const std::vector<Rational>& v);
Json to_json(const Poly& p);
Json to_json(const LaurentPoly& p);
Json to_json(const Matrix& m);
Json to_json(const VerifyReport& r);

} // namespace krw
