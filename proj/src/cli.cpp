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

#include "krw/cli.hpp"

#include "krw/json_io.hpp"
#include "krw/krawtchouk.hpp"
#include "krw/model_bargmann.hpp"
#include "krw/model_bg.hpp"
#include "krw/model_fd.hpp"
#include "krw/pade.hpp"
#include "krw/su2.hpp"
#include "krw/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace krw {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CliArgs {
    std::vector<std::string> positional;
    std::optional<long> n, k, cap, m, a; // cap is --N
    bool adjoint = false;
    std::string format = "json";
};

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

long parse_long(const std::string& flag, const std::string& text) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(text, &pos);
        if (pos != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw UsageError(flag + " expects an integer, got '" + text + "'");
    }
}

CliArgs parse_args(const std::vector<std::string>& args, std::size_t from) {
    CliArgs out;
    for (std::size_t i = from; i < args.size(); ++i) {
        const std::string& tok = args[i];
        auto next = [&]() -> const std::string& {
            if (i + 1 >= args.size()) {
                throw UsageError("missing value after " + tok);
            }
            return args[++i];
        };
        if (tok == "--n") {
            out.n = parse_long(tok, next());
        } else if (tok == "--k") {
            out.k = parse_long(tok, next());
        } else if (tok == "--N") {
            out.cap = parse_long(tok, next());
        } else if (tok == "--m") {
            out.m = parse_long(tok, next());
        } else if (tok == "--a") {
            out.a = parse_long(tok, next());
        } else if (tok == "--adjoint") {
            out.adjoint = true;
        } else if (tok == "--format") {
            out.format = next();
            if (out.format != "json" && out.format != "csv") {
                throw UsageError("--format must be json or csv");
            }
        } else if (tok.rfind("--", 0) == 0) {
            throw UsageError("unknown option " + tok);
        } else {
            out.positional.push_back(tok);
        }
    }
    return out;
}

long require(const std::optional<long>& v, const char* flag) {
    if (!v) {
        throw UsageError(std::string("missing required option ") + flag);
    }
    return *v;
}

int checked_int(long v, const char* flag) {
    if (v < -1000000 || v > 1000000) {
        throw UsageError(std::string(flag) + " is out of the supported range");
    }
    return static_cast<int>(v);
}

int cmd_eval(const CliArgs& a, std::ostream& out) {
    const int n = checked_int(require(a.n, "--n"), "--n");
    const int k = checked_int(require(a.k, "--k"), "--k");
    const int N = checked_int(require(a.cap, "--N"), "--N");
    out << krawtchouk(n, k, N).str() << "\n";
    return kExitPass;
}

int cmd_table(const CliArgs& a, std::ostream& out) {
    const int N = checked_int(require(a.cap, "--N"), "--N");
    const Matrix t = krawtchouk_table(N);
    if (a.format == "csv") {
        for (int i = 0; i <= N; ++i) {
            for (int j = 0; j <= N; ++j) {
                out << t.at(i, j).str() << (j == N ? "" : ",");
            }
            out << "\n";
        }
    } else {
        out << to_json(t).dump() << "\n";
    }
    return kExitPass;
}

int cmd_eigvec(const CliArgs& a, std::ostream& out) {
    const int N = checked_int(require(a.cap, "--N"), "--N");
    const int k = checked_int(require(a.k, "--k"), "--k");
    const EigenPair p = a.adjoint ? x_adjoint_eigenvector(k, N) : x_eigenvector(k, N);
    Json j;
    j["eigenvalue"] = p.value.str();
    j["coefficients"] = to_json(p.coeffs);
    out << j.dump() << "\n";
    return kExitPass;
}

int cmd_model(const CliArgs& a, std::ostream& out) {
    if (a.positional.empty()) {
        throw UsageError("model requires a name: fd, bargmann or bg");
    }
    const std::string& which = a.positional.front();
    const int N = checked_int(require(a.cap, "--N"), "--N");
    const int k = checked_int(require(a.k, "--k"), "--k");
    Json j;
    j["model"] = which;
    j["N"] = N;
    j["k"] = k;
    if (which == "fd") {
        j["lambda"] = to_json(fd_lambda(k, N));
        j["lambda_star"] = to_json(fd_lambda_star(k, N));
    } else if (which == "bargmann") {
        j["lambda"] = to_json(bargmann_lambda(k, N));
        j["lambda_star"] = to_json(bargmann_lambda_star(k, N));
    } else if (which == "bg") {
        j["lambda"] = to_json(bg_lambda(k, N));
        j["lambda_star"] = to_json(bg_lambda_star(k, N));
    } else {
        throw UsageError("unknown model '" + which + "' (expected fd, bargmann or bg)");
    }
    out << j.dump() << "\n";
    return kExitPass;
}

int cmd_pade(const CliArgs& a, std::ostream& out) {
    const int n = checked_int(require(a.n, "--n"), "--n");
    const int m = checked_int(require(a.m, "--m"), "--m");
    if (n < 0 || m < 0 || n + m < 1) {
        throw UsageError("pade requires n, m >= 0 with n + m >= 1");
    }
    const PadePair p = pade_exp(n, m);
    const auto [index, value] = pade_first_defect(n, m);
    Json j;
    j["numerator"] = to_json(p.numerator);
    j["denominator"] = to_json(p.denominator);
    j["contact_order"] = n + m;
    j["first_defect"] = Json::array({index, value.str()});
    out << j.dump() << "\n";
    return kExitPass;
}

std::string joined_identity_names() {
    std::string s;
    for (const auto& name : identity_names()) {
        if (!s.empty()) {
            s += ", ";
        }
        s += name;
    }
    return s;
}

int cmd_verify(const CliArgs& a, std::ostream& out) {
    if (a.positional.empty()) {
        throw UsageError("verify requires an identity name; valid names: " +
                         joined_identity_names());
    }
    const std::string& name = a.positional.front();
    const auto& names = identity_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw UsageError("unknown identity '" + name + "'; valid names: " +
                         joined_identity_names());
    }
    const int N = checked_int(require(a.cap, "--N"), "--N");
    if (N < 1) {
        throw UsageError("--N must be >= 1");
    }
    const VerifyReport rep =
        (name == "kummer" && a.a) ? verify_kummer(*a.a, N) : verify_identity(name, N);
    out << to_json(rep).dump() << "\n";
    return rep.pass ? kExitPass : kExitFail;
}

int cmd_verify_all(const CliArgs& a, std::ostream& out) {
    long nmax = 12;
    if (const char* env = std::getenv("KRW_NMAX")) {
        nmax = parse_long("KRW_NMAX", env);
    }
    if (a.cap) {
        nmax = *a.cap;
    }
    if (nmax < 1) {
        throw UsageError("verify-all bound must be >= 1");
    }
    const std::vector<VerifyReport> reports = verify_all(checked_int(nmax, "--N"));
    Json arr = Json::array();
    bool all_pass = true;
    for (const auto& rep : reports) {
        all_pass = all_pass && rep.pass;
        arr.push_back(to_json(rep));
    }
    out << arr.dump() << "\n";
    return all_pass ? kExitPass : kExitFail;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << "usage: krw <eval|table|eigvec|model|pade|verify|verify-all> [options]\n";
        return kExitUsage;
    }
    const std::string& cmd = args.front();
    try {
        const CliArgs parsed = parse_args(args, 1);
        if (cmd == "eval") return cmd_eval(parsed, out);
        if (cmd == "table") return cmd_table(parsed, out);
        if (cmd == "eigvec") return cmd_eigvec(parsed, out);
        if (cmd == "model") return cmd_model(parsed, out);
        if (cmd == "pade") return cmd_pade(parsed, out);
        if (cmd == "verify") return cmd_verify(parsed, out);
        if (cmd == "verify-all") return cmd_verify_all(parsed, out);
        err << "unknown command '" << cmd << "'\n";
        err << "usage: krw <eval|table|eigvec|model|pade|verify|verify-all> [options]\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
}

} // namespace krw
