#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kform/cli.hpp"
#include "kform/errors.hpp"

using namespace kform;

namespace {

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = run_command(args, out, err);
    return {status, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("rep expression parser") {
    auto t = builtin_quaternion8();
    CHECK(parse_rep_expression("2*y", t).coeffs == std::vector<BigInt>{0, 0, 0, 0, 2});
    CHECK(parse_rep_expression("2 - y", t).coeffs ==
          std::vector<BigInt>{2, 0, 0, 0, -1});
    CHECK(parse_rep_expression("3 - x_i - x_j - x_k", t).coeffs ==
          std::vector<BigInt>{3, -1, -1, -1, 0});
    CHECK(parse_rep_expression("x_i + y", t).coeffs ==
          std::vector<BigInt>{0, 1, 0, 0, 1});
    CHECK(parse_rep_expression("-y + 2*x_j", t).coeffs ==
          std::vector<BigInt>{0, 0, 2, 0, -1});
    CHECK(parse_rep_expression("5", t).coeffs == std::vector<BigInt>{5, 0, 0, 0, 0});
    CHECK_THROWS_AS(parse_rep_expression("2*w", t), UnknownName);
    CHECK_THROWS_AS(parse_rep_expression("2 +", t), ParseError);
    CHECK_THROWS_AS(parse_rep_expression("", t), ParseError);
    CHECK_THROWS_AS(parse_rep_expression("y y", t), ParseError);

    auto c5 = builtin_cyclic(5);
    CHECK(parse_rep_expression("t + t^4", c5).coeffs ==
          std::vector<BigInt>{0, 1, 0, 0, 1});
}

TEST_CASE("printed expressions reparse to the same character") {
    auto t = builtin_quaternion8();
    for (const std::string& s :
         {"2*y", "2 - y", "3 - x_i - x_j - x_k", "-y", "0", "x_i + 4*y - 7"}) {
        auto v = parse_rep_expression(s, t);
        CHECK(parse_rep_expression(v.to_string(), t) == v);
    }
}

TEST_CASE("kform subcommand reproduces the S^7/Q8 result") {
    auto r = run({"kform", "--group", "q8", "--rep", "2*y"});
    CHECK(r.status == 0);
    CHECK(r.out.find("Z/4 + Z/4 + Z/8") != std::string::npos);
    CHECK(r.out.find("order(2-y) = 8") != std::string::npos);
}

TEST_CASE("free subcommand exit codes and witness") {
    auto r = run({"free", "--group", "q8", "--rep", "x_i + y"});
    CHECK(r.status == 1);
    CHECK(r.out.find("witness class: -1") != std::string::npos);

    r = run({"free", "--group", "q8", "--rep", "2*y"});
    CHECK(r.status == 0);
    CHECK(r.out.find("free: yes") != std::string::npos);

    r = run({"free", "--group", "cyclic:5", "--rep", "t + t^2"});
    CHECK(r.status == 0);
}

TEST_CASE("counterexample subcommand") {
    auto r = run({"counterexample"});
    CHECK(r.status == 0);
    CHECK(r.out.find("k = 3") != std::string::npos);
    CHECK(r.out.find("parity = odd") != std::string::npos);
}

TEST_CASE("usage and domain error exit codes") {
    CHECK(run({"bogus"}).status == 2);
    CHECK(run({}).status == 2);
    CHECK(run({"kform", "--group", "q8"}).status == 2);             // missing --rep
    CHECK(run({"kform", "--group", "q8", "--rep", "2 +"}).status == 2);
    CHECK(run({"kform", "--group", "q8", "--rep", "2*w"}).status == 1);
    CHECK(run({"kform", "--group", "q8", "--rep", "x_i + y"}).status == 1);
    CHECK(run({"kform", "--group", "nosuch", "--rep", "y"}).status == 1);
    CHECK(run({"ring", "eval", "--group", "q8", "--expr", "y", "--op", "mul"}).status ==
          2);  // mul without --with
}

TEST_CASE("ring eval operators") {
    auto r = run({"ring", "eval", "--group", "q8", "--expr", "2 - y", "--op", "mul",
                  "--with", "2 - y"});
    CHECK(r.status == 0);
    CHECK(r.out.find("result: 5 + x_i + x_j + x_k - 4*y") != std::string::npos);

    r = run({"ring", "eval", "--group", "q8", "--expr", "y", "--op", "adams:2"});
    CHECK(r.status == 0);
    CHECK(r.out.find("result: -1 + x_i + x_j + x_k") != std::string::npos);

    r = run({"ring", "eval", "--group", "q8", "--expr", "y", "--op", "lambda:2"});
    CHECK(r.status == 0);
    CHECK(r.out.find("result: 1\n") != std::string::npos);

    r = run({"ring", "eval", "--group", "q8", "--expr", "2*y", "--op",
             "lambda-minus-one"});
    CHECK(r.status == 0);
    CHECK(r.out.find("result: 5 + x_i + x_j + x_k - 4*y") != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical") {
    const std::vector<std::string> args = {"kform", "--group", "q8", "--rep", "2*y",
                                           "--format", "json"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("JSON reports round-trip") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"kform", "--group", "q8", "--rep", "2*y", "--format", "json"},
             {"counterexample", "--format", "json"},
             {"table", "show", "--group", "q8", "--format", "json"},
             {"ring", "eval", "--group", "cyclic:4", "--expr", "2*t", "--format",
              "json"},
         }) {
        auto r = run(args);
        REQUIRE(r.status == 0);
        auto parsed = nlohmann::ordered_json::parse(r.out);
        CHECK(parsed.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("table show includes the virtual rows for q8") {
    auto r = run({"table", "show", "--group", "q8", "--format", "json"});
    REQUIRE(r.status == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    REQUIRE(j.contains("virtual"));
    CHECK(j["virtual"][3]["name"] == "delta");
    CHECK(j["virtual"][3]["values"] ==
          nlohmann::ordered_json::array({"0", "4", "2", "2", "2"}));
}

TEST_CASE("table validate reports corrupted files") {
    auto dir = std::string(KFORM_GOLDEN_DIR);
    auto r = run({"table", "validate", "--table", dir + "/../data/c4_table.json"});
    CHECK(r.status == 0);
    CHECK(r.out.find("ok") != std::string::npos);

    r = run({"table", "validate", "--table", dir + "/../data/c4_table_bad.json"});
    CHECK(r.status == 1);
    CHECK(r.out.find("violation") != std::string::npos);

    CHECK(run({"table", "validate"}).status == 1);  // no --table
}

TEST_CASE("custom table files drive the pipeline") {
    auto dir = std::string(KFORM_GOLDEN_DIR);
    auto r = run({"kform", "--group", "ignored", "--table", dir + "/../data/c4_table.json",
                  "--rep", "2*t"});
    CHECK(r.status == 0);
    // lens space S^3/C4: reduced K0 = Z/4
    CHECK(r.out.find("reduced K^0 = Z/4\n") != std::string::npos);
}

TEST_CASE("golden outputs regenerate bit-exactly") {
    auto dir = std::string(KFORM_GOLDEN_DIR);
    struct Golden {
        std::vector<std::string> args;
        std::string file;
    };
    for (const auto& g : std::vector<Golden>{
             {{"kform", "--group", "q8", "--rep", "2*y"}, "kform_q8_2y.txt"},
             {{"kform", "--group", "q8", "--rep", "2*y", "--format", "json"},
              "kform_q8_2y.json"},
             {{"table", "show", "--group", "q8"}, "table_q8.txt"},
             {{"counterexample"}, "counterexample.txt"},
         }) {
        auto r = run(g.args);
        REQUIRE(r.status == 0);
        CHECK(r.out == read_file(dir + "/" + g.file));
    }
}

TEST_CASE("kform-family") {
    auto r = run({"kform-family", "--group", "q8", "--n", "1"});
    CHECK(r.status == 0);
    CHECK(r.out.find("Z/4 + Z/4 + Z/8") != std::string::npos);
    CHECK(run({"kform-family", "--group", "cyclic:3", "--n", "1"}).status == 1);
}
