#include "partition_lab/cli.hpp"
#include "partition_lab/euler.hpp"
#include "partition_lab/serialize.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace plab;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("partition_lab_cli_" + name);
}

} // namespace

TEST_CASE("compute by each method")
{
    CHECK(run({"compute", "--n", "10"}).out == "p(10) = 42\n");
    CHECK(run({"compute", "--n", "10", "--method", "bruteforce"}).out == "p(10) = 42\n");
    CHECK(run({"compute", "--n", "500"}).out == "p(500) = 2300165032574323995027\n");

    auto combinatorial = run({"compute", "--n", "21", "--method", "combinatorial"});
    CHECK(combinatorial.code == cli::ok);
    CHECK(combinatorial.out ==
          "p(21) = 792\n  S_1(21) = 21\n  S_2(21) = 330\n  S_3(21) = 407\n  S_4(21) = 34\n");

    auto zero = run({"compute", "--n", "0", "--method", "combinatorial"});
    CHECK(zero.out == "p(0) = 1 (by convention)\n");

    auto estimate = run({"compute", "--n", "100", "--method", "estimate", "--format", "json"});
    REQUIRE(estimate.code == cli::ok);
    auto j = nlohmann::json::parse(estimate.out);
    CHECK(std::abs(j["estimate"].get<double>() - 190568944.78) < 0.01);
    CHECK(run({"compute", "--n", "0", "--method", "estimate"}).code == cli::usage_error);
}

TEST_CASE("compute JSON")
{
    auto euler = nlohmann::json::parse(run({"compute", "--n", "1000", "--format", "json"}).out);
    CHECK(euler["value"] == "24061467864032622473692149727991");
    auto combinatorial = run({"compute", "--n", "21", "--method", "combinatorial", "--format", "json"});
    CHECK(breakdown_from_json(nlohmann::json::parse(combinatorial.out)) == p_combinatorial(21));
    auto memo = run({"compute", "--n", "400", "--method", "combinatorial", "--strategy", "memoized", "--format",
                     "json"});
    CHECK(nlohmann::json::parse(memo.out)["total"] == build_table(400)[400].get_str());
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run({"compute", "--n", "5", "--method", "nonsense"}).code == cli::usage_error);
    CHECK(run({"compute"}).code == cli::usage_error);
    CHECK(run({"compute", "--n", "-3"}).code == cli::usage_error);
    CHECK(run({}).code == cli::usage_error);
    CHECK(run({"frobnicate"}).code == cli::usage_error);
    CHECK(run({"compute", "--n", "5", "--format", "csv"}).code == cli::usage_error);
    CHECK(run({"table", "--max-n", "10001"}).code == cli::usage_error);
    CHECK(run({"verify", "nosuch"}).code == cli::usage_error);
    CHECK(run({"verify", "grid", "--suite", "grid"}).code == cli::usage_error);

    auto capped = run({"compute", "--n", "61", "--method", "bruteforce"});
    CHECK(capped.code == cli::usage_error);
    CHECK(capped.err.find("60") != std::string::npos);
    CHECK(run({"--help"}).code == cli::ok);
}

TEST_CASE("--check passes when every method agrees")
{
    for (std::uint32_t n : {0u, 1u, 17u, 60u, 61u, 150u}) {
        auto r = run({"compute", "--n", std::to_string(n), "--check"});
        CAPTURE(n);
        CHECK(r.code == cli::ok);
    }
    CHECK(run({"compute", "--n", "120", "--check", "--parallel", "--method", "combinatorial"}).code == cli::ok);
}

TEST_CASE("--check exits 1 when a cached value is wrong")
{
    auto path = temp_file("wrong.txt");
    {
        std::ofstream out(path);
        for (const char* v : {"1", "1", "2", "3", "5", "7", "11", "15", "22", "30", "43"})
            out << v << '\n';
    }
    auto r = run({"compute", "--n", "10", "--check", "--cache", path.string()});
    CHECK(r.code == cli::verification_failed);
    CHECK(r.err.find("euler=43") != std::string::npos);
    CHECK(r.err.find("bruteforce=42") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("cache file via flag and environment")
{
    auto path = temp_file("env.txt");
    std::filesystem::remove(path);
    CHECK(run({"compute", "--n", "50", "--cache", path.string()}).out == "p(50) = 204226\n");
    CHECK(load_table(path).max_n() == 50);

    ::setenv("PARTITION_LAB_CACHE", path.string().c_str(), 1);
    CHECK(run({"compute", "--n", "80"}).code == cli::ok);
    CHECK(load_table(path).max_n() == 80);
    {
        std::ofstream out(path, std::ios::app);
        out << "not a number\n";
    }
    auto corrupt = run({"compute", "--n", "90"});
    CHECK(corrupt.code == cli::usage_error);
    CHECK(corrupt.err.find("line 81") != std::string::npos);
    ::unsetenv("PARTITION_LAB_CACHE");
    CHECK(run({"compute", "--n", "90"}).code == cli::ok);
    std::filesystem::remove(path);
}

TEST_CASE("table csv")
{
    auto r = run({"table", "--max-n", "16", "--format", "csv"});
    REQUIRE(r.code == cli::ok);
    auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 17);
    CHECK(rows[0] == "n,S_1,S_2,S_3,S_4,p(n),S_31,S_32,S_33,S_411");
    CHECK(rows[12] == "12,12,55,10,0,77,8,2,0,0");
    CHECK(rows[16] == "16,16,140,74,1,231,40,28,6,1");

    auto one = lines_of(run({"table", "--max-n", "1", "--format", "csv"}).out);
    REQUIRE(one.size() == 2);
    CHECK(one[1] == "1,1,1");

    auto hundred = lines_of(run({"table", "--max-n", "100", "--format", "csv"}).out);
    REQUIRE(hundred.size() == 101);
    CHECK(hundred[0].find("S_31") == std::string::npos);
    CHECK(hundred[100].substr(hundred[100].rfind(',') + 1) == "190569292");
}

TEST_CASE("table text leaves unstarted levels blank")
{
    auto rows = lines_of(run({"table", "--max-n", "9"}).out);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0] == "n  S_1  S_2  S_3  p(n)  S_31");
    CHECK(rows[4] == "4    4    1          5");
    CHECK(rows[9] == "9    9   20    1    30     1");
    auto json = nlohmann::json::parse(run({"table", "--max-n", "12", "--format", "json"}).out);
    CHECK(json[11]["levels"]["3"] == "10");
    CHECK(json[11]["sublevels"]["S_32"] == "2");
    CHECK_FALSE(json[2]["levels"].contains("2"));
}

TEST_CASE("verify exits 0 on the shipped tables")
{
    auto r = run({"verify", "--max-n", "60"});
    CHECK(r.code == cli::ok);
    CHECK(r.out.find("FAIL") == std::string::npos);
    for (const auto& name : cli::suite_names())
        CHECK(r.out.find(name) != std::string::npos);
    CHECK(run({"verify", "grid", "--max-n", "30"}).out.rfind("PASS grid", 0) == 0);
    CHECK(run({"verify", "--suite", "duality", "--max-n", "20"}).code == cli::ok);
}

TEST_CASE("verify exits 1 and names the level when a coefficient is corrupted")
{
    std::vector<ResidueClassForm> s2(s2_forms().begin(), s2_forms().end());
    s2[0].coeffs[1] += 1;
    cli::VerifyInputs inputs;
    inputs.max_n = 60;
    inputs.suite = "closed-forms";
    inputs.s2 = s2;
    std::ostringstream out, err;
    CHECK(cli::run_verify(inputs, out, err) == cli::verification_failed);
    CHECK(out.str().find("FAIL closed-forms: level 2") != std::string::npos);

    std::vector<ResidueClassForm> s3(s3_forms().begin(), s3_forms().end());
    s3[4].coeffs[0] -= 1;
    inputs.s2 = s2_forms();
    inputs.s3 = s3;
    std::ostringstream out3;
    CHECK(cli::run_verify(inputs, out3, err) == cli::verification_failed);
    CHECK(out3.str().find("level 3") != std::string::npos);
    CHECK(out3.str().find("n = 1 mod 3, n odd") != std::string::npos);
}

TEST_CASE("qbinom output")
{
    auto text = run({"qbinom", "--n", "6", "--k", "3", "--witness", "3"});
    CHECK(text.code == cli::ok);
    CHECK(text.out.find("coefficients: 1 1 2 3 3 3 3 2 1 1") != std::string::npos);
    CHECK(text.out.find("10 into 4 parts, greatest 4: 2224 1234 1144") != std::string::npos);

    auto j = nlohmann::json::parse(run({"qbinom", "--n", "6", "--k", "2", "--witness", "4", "--format", "json"}).out);
    CHECK(j["coefficients"] == nlohmann::json({"1", "1", "2", "2", "3", "2", "2", "1", "1"}));
    CHECK(j["witness"]["coefficient"] == "3");
    CHECK(j["witness"]["new"].size() == 3);
    CHECK(j["witness"]["classical"].size() == 3);

    CHECK(nlohmann::json::parse(run({"qbinom", "--n", "2", "--k", "5", "--format", "json"}).out)["coefficients"]
              .empty());
}

TEST_CASE("bench JSON records round-trip")
{
    auto r = run({"bench", "--max-n", "120", "--max-k", "6", "--parallel", "--format", "json"});
    REQUIRE(r.code == cli::ok);
    auto j = nlohmann::json::parse(r.out);
    std::vector<std::string> tasks;
    for (const auto& record : j) {
        auto t = timing_from_json(record);
        CHECK(to_json(t) == record);
        CHECK(t.millis >= 0.0);
        tasks.push_back(t.task);
    }
    CHECK(tasks == std::vector<std::string>{"euler_table", "combinatorial_memoized", "combinatorial_nested",
                                            "combinatorial_nested_parallel", "qbinom"});

    auto skipped = run({"bench", "--max-n", "400", "--max-k", "2", "--nested-limit", "100"});
    CHECK(skipped.code == cli::ok);
    CHECK(skipped.err.find("skipping") != std::string::npos);
    CHECK(run({"bench", "--max-n", "0", "--max-k", "0"}).code == cli::ok);
}

TEST_CASE("every method agrees for n <= 60")
{
    for (std::uint32_t n = 0; n <= 60; ++n) {
        std::string expected = run({"compute", "--n", std::to_string(n)}).out;
        CAPTURE(n);
        CHECK(run({"compute", "--n", std::to_string(n), "--method", "bruteforce"}).out == expected);
        CHECK(run({"compute", "--n", std::to_string(n), "--method", "combinatorial"}).out.rfind(
                  expected.substr(0, expected.size() - 1), 0) == 0);
    }
}
