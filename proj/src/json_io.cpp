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

#include "krw/json_io.hpp"

namespace krw {

Json to_json(const Rational& r) {
    return Json(r.str());
}

Json to_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) {
        a.push_back(x.str());
    }
    return a;
}

Json to_json(const Poly& p) {
    return to_json(p.coeffs());
}

Json to_json(const LaurentPoly& p) {
    Json j;
    j["low"] = p.low();
    j["coeffs"] = to_json(p.coeffs());
    return j;
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) {
            row.push_back(m.at(i, j).str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const VerifyReport& r) {
    Json j;
    j["identity"] = r.identity;
    Json params;
    for (const auto& [key, value] : r.params) {
        params[key] = value;
    }
    j["params"] = std::move(params);
    j["status"] = r.pass ? "pass" : "fail";
    if (r.counterexample) {
        Json ce;
        Json inputs;
        for (const auto& [key, value] : r.counterexample->inputs) {
            inputs[key] = value;
        }
        ce["inputs"] = std::move(inputs);
        ce["expected"] = r.counterexample->expected;
        ce["actual"] = r.counterexample->actual;
        j["counterexample"] = std::move(ce);
    }
    return j;
}

} // namespace krw
