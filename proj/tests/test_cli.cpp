#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CommandResult {
    int exit_code;
    std::string output;  // stdout only
};

CommandResult run(const std::string& args) {
    const std::string cmd =
        std::string(TBREG_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        output.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string temp_path(const std::string& name) {
    return "cli_test_" + name;
}

}  // namespace

TEST_CASE("gen emits a deterministic csv") {
    const auto a = run("gen --model 1 --n 100 --theta0 0.5 --design fixed --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.output.rfind("x,y\n", 0) == 0);
    // header + 100 rows
    std::size_t lines = 0;
    for (char c : a.output) {
        if (c == '\n') ++lines;
    }
    CHECK(lines == 101);
    const auto b = run("gen --model 1 --n 100 --theta0 0.5 --design fixed --seed 7");
    CHECK(b.output == a.output);
    const auto c = run("gen --model 1 --n 100 --theta0 0.5 --design fixed --seed 8");
    CHECK(c.output != a.output);
}

TEST_CASE("gen usage errors exit with 2") {
    CHECK(run("gen --model 1 --n 1").exit_code == 2);
    CHECK(run("gen --model 9 --n 100").exit_code == 2);
    CHECK(run("gen --theta0 7 --n 100").exit_code == 2);
    CHECK(run("gen --design diagonal --n 100").exit_code == 2);
    CHECK(run("gen --no-such-flag").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("fit on generated data returns a sane estimate") {
    const std::string data = temp_path("fit.csv");
    CHECK(run("gen --model 1 --n 100 --theta0 1 --seed 3 --out " + data)
              .exit_code == 0);
    const auto fit = run("fit --data " + data);
    CHECK(fit.exit_code == 0);
    CHECK(fit.output.find("\"theta_hat\"") != std::string::npos);
    CHECK(fit.output.find("\"criterion\": \"TCM\"") != std::string::npos);
    CHECK(fit.output.find("\"pearson\"") != std::string::npos);
    CHECK(fit.output.find("\"kendall\"") != std::string::npos);
    CHECK(fit.output.find("\"spearman\"") != std::string::npos);
    CHECK(fit.output.find("\"n\": 100") != std::string::npos);
    std::remove(data.c_str());
}

TEST_CASE("fit with a singleton box pins theta") {
    const std::string data = temp_path("fit_pin.csv");
    CHECK(run("gen --model 1 --n 60 --theta0 1 --seed 5 --out " + data)
              .exit_code == 0);
    const auto fit = run("fit --data " + data +
                         " --theta-min 0.7 --theta-max 0.7");
    CHECK(fit.exit_code == 0);
    CHECK(fit.output.find("\"theta_hat\": 0.7") != std::string::npos);
    std::remove(data.c_str());
}

TEST_CASE("fit rejects bad data with exit 1 naming the line") {
    const std::string data = temp_path("bad.csv");
    {
        std::ofstream out(data);
        out << "x,y\n0.2,1.5\n0.4,nope\n";
    }
    const auto fit = run("fit --data " + data);
    CHECK(fit.exit_code == 1);
    std::remove(data.c_str());
    CHECK(run("fit --data /no/such/file.csv").exit_code == 1);
}

TEST_CASE("fit emit-boundary produces the 201-point grid") {
    const std::string data = temp_path("grid.csv");
    CHECK(run("gen --model 1 --n 40 --theta0 1 --seed 6 --out " + data)
              .exit_code == 0);
    const auto fit = run("fit --data " + data +
                         " --theta-min 1 --theta-max 1 --emit-boundary");
    CHECK(fit.exit_code == 0);
    std::size_t count = 0;
    std::size_t pos = 0;
    while ((pos = fit.output.find("\"raw\"", pos)) != std::string::npos) {
        ++count;
        ++pos;
    }
    CHECK(count == 201);
    std::remove(data.c_str());
}

TEST_CASE("table reference-only report") {
    const auto ref = run("table --table 1 --reps 0");
    CHECK(ref.exit_code == 0);
    CHECK(ref.output.find("N/A") != std::string::npos);
    CHECK(ref.output.find("0.461") != std::string::npos);
    CHECK(run("table --table 9").exit_code == 2);
    CHECK(run("table --table cor3").exit_code == 2);
}

TEST_CASE("table run is deterministic under thread count") {
    const std::string base = "table --table 1 --reps 2 --seed 42";
    const auto one = run(base + " --threads 1");
    CHECK(one.exit_code == 0);
    const auto eight = run(base + " --threads 8");
    CHECK(eight.exit_code == 0);
    CHECK(one.output == eight.output);
}

TEST_CASE("cor table structure") {
    const auto rep = run("table --table cor2 --reps 2 --seed 11");
    CHECK(rep.exit_code == 0);
    CHECK(rep.output.find("Original data") != std::string::npos);
    CHECK(rep.output.find("TCMKS") != std::string::npos);
    CHECK(rep.output.find("pearson") != std::string::npos);
}
