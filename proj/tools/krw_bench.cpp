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

// Compares the OpenMP kernels against their serial reference twins and
// reports wall times. The outputs are exact rationals, so both paths must
// agree bit for bit; this tool re-checks that while timing.

#include "krw/krawtchouk.hpp"
#include "krw/model_bargmann.hpp"
#include "krw/parallel.hpp"
#include "krw/su2.hpp"
#include "krw/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, int N, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s N=%-5d serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   %s\n", name,
                N, serial_ms, parallel_ms, serial_ms / parallel_ms, equal ? "match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    int table_n = 400;
    int gram_n = 120;
    int residue_n = 120;
    int verify_n = 10;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--N") == 0 && i + 1 < argc) {
            table_n = std::atoi(argv[++i]);
            gram_n = table_n / 3 > 0 ? table_n / 3 : 1;
            residue_n = gram_n;
        } else if (std::strcmp(argv[i], "--verify-N") == 0 && i + 1 < argc) {
            verify_n = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: krw_bench [--N n] [--verify-N n]\n");
            return 2;
        }
    }

    std::printf("workers: %d\n", krw::worker_count());

    {
        krw::Matrix a, b;
        const double s = time_ms([&] { a = krw::krawtchouk_table_serial(table_n); });
        const double p = time_ms([&] { b = krw::krawtchouk_table(table_n); });
        row("krawtchouk_table", table_n, s, p, a == b);
    }
    {
        krw::Matrix a, b;
        const double s = time_ms([&] { a = krw::orthogonality_gram_serial(gram_n); });
        const double p = time_ms([&] { b = krw::orthogonality_gram(gram_n); });
        row("orthogonality_gram", gram_n, s, p, a == b);
    }
    {
        krw::Matrix a, b;
        const double s = time_ms([&] { a = krw::bargmann_biorthogonality_serial(residue_n); });
        const double p = time_ms([&] { b = krw::bargmann_biorthogonality(residue_n); });
        row("bargmann_biorthogonality", residue_n, s, p, a == b);
    }
    {
        std::vector<krw::VerifyReport> a, b;
        const double s = time_ms([&] { a = krw::verify_all(verify_n, krw::Exec::serial); });
        const double p = time_ms([&] { b = krw::verify_all(verify_n, krw::Exec::parallel); });
        bool equal = a.size() == b.size();
        for (std::size_t i = 0; equal && i < a.size(); ++i) {
            equal = a[i] == b[i];
        }
        row("verify_all", verify_n, s, p, equal);
    }
    return 0;
}
