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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "krw/cli.hpp"
#include "krw/verify.hpp"

#include "json.hpp"

#include <cstdlib>
#include <sstream>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = krw::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("eval prints the exact value") {
    const RunResult r = run({"eval", "--n", "2", "--k", "1", "--N", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-1\n");
}

TEST_CASE("table output in both formats") {
    const RunResult csv = run({"table", "--N", "2", "--format", "csv"});
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "1,1,1\n1,0,-1\n1,-1,1\n");

    const RunResult js = run({"table", "--N", "2"});
    CHECK(js.exit_code == 0);
    const json t = json::parse(js.out);
    CHECK(t.size() == 3);
    CHECK(t[1][2] == "-1");
}

TEST_CASE("eigvec payload") {
    const RunResult r = run({"eigvec", "--N", "1", "--k", "0"});
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["eigenvalue"] == "-1/2");
    CHECK(j["coefficients"] == json::array({"1", "1"}));

    const RunResult adj = run({"eigvec", "--N", "2", "--k", "2", "--adjoint"});
    CHECK(adj.exit_code == 0);
    const json ja = json::parse(adj.out);
    CHECK(ja["coefficients"] == json::array({"1", "-1", "1"}));
}

TEST_CASE("model payloads") {
    const RunResult fd = run({"model", "fd", "--k", "1", "--N", "2"});
    CHECK(fd.exit_code == 0);
    const json jfd = json::parse(fd.out);
    CHECK(jfd["lambda"] == json::array({"1", "0", "-1"}));
    CHECK(jfd["lambda_star"] == json::array({"1", "0", "-1"}));

    const RunResult bar = run({"model", "bargmann", "--k", "0", "--N", "1"});
    CHECK(bar.exit_code == 0);
    const json jbar = json::parse(bar.out);
    CHECK(jbar["lambda"] == json::array({"1", "1"}));
    CHECK(jbar["lambda_star"]["low"] == -2);
    CHECK(jbar["lambda_star"]["coeffs"] == json::array({"1", "1"}));

    const RunResult bad = run({"model", "heisenberg", "--k", "0", "--N", "1"});
    CHECK(bad.exit_code == 2);
}

TEST_CASE("pade payload") {
    const RunResult r = run({"pade", "--n", "1", "--m", "1"});
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["numerator"] == json::array({"1", "1/2"}));
    CHECK(j["denominator"] == json::array({"1", "-1/2"}));
    CHECK(j["contact_order"] == 2);
    CHECK(j["first_defect"] == json::array({3, "-1/12"}));
}

TEST_CASE("verify reports and exit codes") {
    const RunResult r = run({"verify", "orthogonality", "--N", "6"});
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["identity"] == "orthogonality");
    CHECK(j["status"] == "pass");

    const RunResult kum = run({"verify", "kummer", "--N", "5", "--a", "2"});
    CHECK(kum.exit_code == 0);
    CHECK(json::parse(kum.out)["params"]["a"] == "2");

    const RunResult bogus = run({"verify", "no-such-identity", "--N", "3"});
    CHECK(bogus.exit_code == 2);
    CHECK(bogus.err.find("orthogonality") != std::string::npos);
    CHECK(bogus.err.find("pade") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"eval", "--n", "1", "--k", "1"}).exit_code == 2);       // missing --N
    CHECK(run({"eval", "--n", "x", "--k", "1", "--N", "2"}).exit_code == 2);
    CHECK(run({"eval", "--n", "5", "--k", "1", "--N", "2"}).exit_code == 2); // out of range
    CHECK(run({"table", "--N", "2", "--format", "xml"}).exit_code == 2);
}

TEST_CASE("verify-all bound from the environment") {
    setenv("KRW_NMAX", "2", 1);
    const RunResult r = run({"verify-all"});
    unsetenv("KRW_NMAX");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).size() == krw::identity_names().size() * 2);

    setenv("KRW_NMAX", "not-a-number", 1);
    const RunResult bad = run({"verify-all"});
    unsetenv("KRW_NMAX");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("verify-all is deterministic and complete") {
    const RunResult a = run({"verify-all", "--N", "3"});
    const RunResult b = run({"verify-all", "--N", "3"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    const json reports = json::parse(a.out);
    CHECK(reports.size() == krw::identity_names().size() * 3);
    for (const auto& rep : reports) {
        CHECK(rep["status"] == "pass");
    }
    // ordering: identity ascending, then N ascending
    for (std::size_t i = 1; i < reports.size(); ++i) {
        const std::string prev = reports[i - 1]["identity"];
        const std::string cur = reports[i]["identity"];
        CHECK(prev <= cur);
        if (prev == cur) {
            const int np = std::stoi(reports[i - 1]["params"]["N"].get<std::string>());
            const int nc = std::stoi(reports[i]["params"]["N"].get<std::string>());
            CHECK(np < nc);
        }
    }
}
