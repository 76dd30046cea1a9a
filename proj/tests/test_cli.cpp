#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(DNACYCLIC_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data_path(const std::string& name) {
    return std::string(DNACYCLIC_DATA) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("factor prints the factorization") {
    const RunResult r = run_cli("factor --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(x+1)(x^2+x+1)\n");
    CHECK(run_cli("factor --n 8").out == "(x+1)^8\n");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("factor").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("tables").exit_code == 2);
}

TEST_CASE("data errors exit 1") {
    CHECK(run_cli("build -f no_such_file.code").exit_code == 1);
    // the published length-6 generators violate their own chain
    CHECK(run_cli("build -f " + data_path("example53ii.code")).exit_code == 1);
    CHECK(run_cli("build -f " + data_path("example53ii.code") + " --relax").exit_code == 0);
}

TEST_CASE("build summarizes the assembled generator") {
    const RunResult r = run_cli("build -f " + data_path("example51.code"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(u+uv+uv^2)x+(u+uv+uv^2)") != std::string::npos);
}

TEST_CASE("round-trip against the golden files") {
    const RunResult words =
        run_cli("enumerate -f " + data_path("example51_followup.code"));
    CHECK(words.exit_code == 0);
    CHECK(words.out == read_file(data_path("golden/table3_codewords.tsv")));

    const RunResult strands =
        run_cli("dna -f " + data_path("example51_followup.code") + " --layout def31");
    CHECK(strands.exit_code == 0);
    CHECK(strands.out == read_file(data_path("golden/table3_strands.txt")));

    const RunResult image = run_cli("image -f " + data_path("example51_followup.code"));
    CHECK(image.exit_code == 0);
    CHECK(image.out == read_file(data_path("golden/table3_image.txt")));

    const RunResult check = run_cli("check -f " + data_path("golden/table3_strands.txt") +
                                    " --d 3 --constraints hamming");
    CHECK(check.exit_code == 0);
    CHECK(check.out == read_file(data_path("golden/table3_check.tsv")));

    const RunResult table = run_cli("tables --which 3");
    CHECK(table.exit_code == 0);
    CHECK(table.out == read_file(data_path("golden/table3_table.tsv")));
}

TEST_CASE("table regeneration is deterministic") {
    for (const char* which : {"1", "2", "3", "4"}) {
        const RunResult a = run_cli(std::string("tables --which ") + which);
        const RunResult b = run_cli(std::string("tables --which ") + which);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("enumerate on the zero-generator spec emits one zero word") {
    const std::string spec = "zero_spec.tmp.code";
    {
        std::ofstream out(spec);
        out << "form=r1-odd\nn=3\ng=1001\na=1001\n";
    }
    const RunResult r = run_cli("enumerate -f " + spec);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "00\t00\t00\n");
    std::remove(spec.c_str());
}

TEST_CASE("constraint check reports witnesses") {
    const std::string strands = "strands.tmp.txt";
    {
        std::ofstream out(strands);
        out << "AAA\nAAT\n";
    }
    const RunResult r = run_cli("check -f " + strands + " --d 3 --constraints hamming --no-header");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "hamming\tfail\tAAA\tAAT\n");
    std::remove(strands.c_str());
}

TEST_CASE("verify exits clean with the shipped allowlist") {
    const RunResult r =
        run_cli("verify --suite crt --allowlist " + data_path("errata_allowlist.tsv") + " --tsv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("crt/printed-inverse-formula") != std::string::npos);
    // without an allowlist entry the mismatch drives the exit code
    const std::string empty = "empty_allow.tmp";
    {
        std::ofstream out(empty);
        out << "# nothing allowed\n";
    }
    const RunResult strict = run_cli("verify --suite crt --allowlist " + empty);
    CHECK(strict.exit_code == 1);
    std::remove(empty.c_str());
}

TEST_CASE("output directory environment variable") {
    const RunResult r = run_cli("factor --n 6 -o factor6.tmp.txt");
    CHECK(r.exit_code == 0);
    CHECK(read_file("factor6.tmp.txt") == "(x+1)^2(x^2+x+1)^2\n");
    std::remove("factor6.tmp.txt");

    // relative -o paths land under DNACYCLIC_OUT_DIR when it is set
    REQUIRE(std::system("mkdir -p outdir.tmp") == 0);
    const std::string cmd = std::string("DNACYCLIC_OUT_DIR=outdir.tmp ") + DNACYCLIC_CLI +
                            " factor --n 3 -o f3.txt 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(read_file("outdir.tmp/f3.txt") == "(x+1)(x^2+x+1)\n");
    std::remove("outdir.tmp/f3.txt");
    std::remove("outdir.tmp");
}
