/*
   Copyright 2026 The peterweyl authors

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

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "peterweyl/serialize.hpp"

#ifndef PW_CLI_PATH
#error "PW_CLI_PATH must point at the built command line binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PW_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    RunResult result{};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("frt text output lists the six relations") {
    RunResult r = run_cli("frt --k 2 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("a*d - d*a - (q - q^-1)*b*c = 0") != std::string::npos);
    CHECK(r.output.find("a*b - q*b*a = 0") != std::string::npos);
    int lines = 0;
    for (char c : r.output)
        if (c == '\n') ++lines;
    CHECK(lines == 6);
}

TEST_CASE("schur-weyl text output") {
    RunResult r = run_cli("schur-weyl --k 2 --n 3 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "4x1 + 2x2 = 8\n");
}

TEST_CASE("hopf-check passes and reports the check count") {
    RunResult r = run_cli("hopf-check --algebra sl2 --max-weight 1 --samples 5 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
    const std::string args = "threej --algebra gl --k 2 --lambda 1,0 --mu 1,0 --format json";
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    RunResult eval1 = run_cli("eval --expr \"(q^2-1)/(q-q^-1)\" --format json --at-one");
    RunResult eval2 = run_cli("eval --expr \"(q^2-1)/(q-q^-1)\" --format json --at-one");
    CHECK(eval1.output == eval2.output);
    CHECK(eval1.output.find("\"canonical\": \"q\"") != std::string::npos);
}

TEST_CASE("JSON artifacts round trip through their schemas") {
    RunResult threej_run = run_cli("threej --algebra gl --k 2 --lambda 1,0 --mu 1,0 --format json");
    CHECK(threej_run.exit_code == 0);
    pw::ThreeJTable table = pw::threej_from_json(pw::Json::parse(threej_run.output));
    CHECK(pw::to_json(table).dump(2) + "\n" == threej_run.output);

    RunResult frt_run = run_cli("frt --k 2 --format json");
    CHECK(frt_run.exit_code == 0);
    pw::FrtResult frt = pw::frt_from_json(pw::Json::parse(frt_run.output));
    CHECK(pw::to_json(frt).dump(2) + "\n" == frt_run.output);

    RunResult sc_run =
        run_cli("structure-constants --algebra sl2 --lambda 1 --mu 1 --format json");
    CHECK(sc_run.exit_code == 0);
    pw::StructureTable sc = pw::structure_table_from_json(pw::Json::parse(sc_run.output));
    CHECK(pw::to_json(sc).dump(2) + "\n" == sc_run.output);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("threej --algebra gl --k 2 --lambda 1,0").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("threej --algebra su5 --lambda 1 --mu 1").exit_code == 2);
    CHECK(run_cli("eval --expr \"q+\"").exit_code == 2);
    CHECK(run_cli("structure-constants --algebra gl --k 2 --lambda 3,9 --mu 1,0").exit_code == 2);
}

TEST_CASE("--out writes files, resolved against PETERWEYL_OUT_DIR") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "pw_outdir_test";
    fs::create_directories(dir);
    const std::string cmd = std::string("PETERWEYL_OUT_DIR=") + dir.string() + " " + PW_CLI_PATH +
                            " schur-weyl --k 2 --n 2 --format text --out dims.txt 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream file(dir / "dims.txt");
    std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    CHECK(text == "3x1 + 1x1 = 4\n");
    fs::remove_all(dir);
}

TEST_CASE("export-goldens writes the canonical artifact set") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "pw_goldens_test";
    fs::remove_all(dir);
    RunResult r = run_cli("export-goldens --dir " + dir.string());
    CHECK(r.exit_code == 0);

    for (const char* name : {"frt_m2.txt", "frt_m2_q1.txt", "m2_sec_expansions.json",
                             "threej_gl2.json", "structure_constants_m2.json",
                             "schur_weyl_dims.json", "schur_weyl_dims.txt"})
        CHECK(fs::exists(dir / name));

    std::ifstream expansions(dir / "m2_sec_expansions.json");
    pw::Json j = pw::Json::parse(expansions);
    CHECK(j["ad"]["s*s"] == "(q^2)/(q^2+1)");
    CHECK(j["da"]["t*t"] == "(q^2)/(q^2+1)");
    CHECK(j["bc"]["s*s"] == "(q)/(q^2+1)");

    std::ifstream q1(dir / "frt_m2_q1.txt");
    std::string q1_text((std::istreambuf_iterator<char>(q1)), std::istreambuf_iterator<char>());
    CHECK(q1_text.find("a*d - d*a = 0") != std::string::npos);
    CHECK(q1_text.find("q*") == std::string::npos);  // fully commutative at q=1

    std::ifstream dims(dir / "schur_weyl_dims.txt");
    std::string dims_text((std::istreambuf_iterator<char>(dims)), std::istreambuf_iterator<char>());
    CHECK(dims_text.find("k=2 n=3: 4x1 + 2x2 = 8") != std::string::npos);
    fs::remove_all(dir);
}
