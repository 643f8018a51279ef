#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <lacuna/cli.hpp>

using lacuna::cli::run;
using json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) v.push_back(line);
    return v;
}

}  // namespace

TEST_CASE("eval prints a bare fixed-point value in csv mode") {
    Result r = call({"eval", "--a", "2", "--x", "0.5", "--what", "f", "--decimals", "12"});
    CHECK(r.code == 0);
    CHECK(r.out == "2.081353139804\n");
    CHECK(r.err.empty());

    r = call({"eval", "--a", "2", "--x", "0.5", "--what", "g", "--decimals", "12"});
    CHECK(r.out == "2.081368981006\n");

    r = call({"eval", "--a", "2", "--x", "0.5", "--what", "delta", "--decimals", "12"});
    CHECK(r.out == "-0.000015841202\n");
}

TEST_CASE("eval json carries the full double plus a display string") {
    Result r = call({"eval", "--a", "2", "--x", "0.5", "--what", "delta", "--format", "json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["a"] == 2.0);
    CHECK(j["x"] == 0.5);
    CHECK(j["what"] == "delta");
    CHECK(std::abs(j["value"].get<double>() - (-1.5841201851010460444e-5)) < 1e-13);
    CHECK(j["display"] == "-0.0000158412");
}

TEST_CASE("eval delta0 interprets x through w = 1 - x") {
    Result r = call({"eval", "--a", "3", "--x", "0.9", "--what", "delta0",
                     "--format", "json"});
    json j = json::parse(r.out);
    CHECK(std::abs(j["value"].get<double>() - 0.010852513894484740802) < 1e-12);
}

TEST_CASE("table csv golden first row and shape") {
    Result r = call({"table", "--a", "2", "--count", "3"});
    CHECK(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "n,x_delta,x_delta0,rel_err");
    CHECK(ls[1] == "0,0.4659328684,0.2362862856,0.4299957");
    CHECK(ls[2].substr(0, 14) == "1,0.5827324792");
}

TEST_CASE("table respects --decimals for x and prints rel_err 3 digits shorter") {
    Result r = call({"table", "--a", "2", "--count", "1", "--decimals", "6"});
    auto ls = lines(r.out);
    CHECK(ls[1] == "0,0.465933,0.236286,0.430");
    r = call({"table", "--a", "2", "--count", "1", "--decimals", "3"});
    ls = lines(r.out);
    CHECK(ls[1] == "0,0.466,0.236,0.4");
}

TEST_CASE("table json rows carry w and s always, x only while it resolves") {
    Result r = call({"table", "--a", "2", "--count", "82", "--format", "json"});
    json j = json::parse(r.out);
    REQUIRE(j["rows"].size() == 82);
    const auto& r0 = j["rows"][0];
    CHECK(r0.contains("x_delta"));
    CHECK(r0.contains("x_delta0"));
    CHECK(std::abs(r0["x_delta"].get<double>() - 0.46593286842730429486) < 1e-12);
    CHECK(std::abs(r0["rel_err"].get<double>() - 0.429995718) < 1e-8);
    const auto& deep = j["rows"][81];
    CHECK(!deep.contains("x_delta"));
    CHECK(!deep.contains("x_delta0"));
    CHECK(deep.contains("w_delta"));
    CHECK(deep.contains("s_delta0"));
    CHECK(deep["w_delta"].get<double>() > 0.0);
}

TEST_CASE("table csv leaves x cells empty once w drops below 1e-12") {
    Result r = call({"table", "--a", "2", "--count", "80"});
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 81);
    CHECK(ls[80].substr(0, 5) == "79,,,");
}

TEST_CASE("zeros csv lists n,x,w,s in increasing x order") {
    Result r = call({"zeros", "--a", "2", "--target", "delta0", "--count", "3"});
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "n,x,w,s");
    CHECK(ls[1].substr(0, 14) == "0,0.2362862856");
    CHECK(ls[2].substr(0, 14) == "1,0.4599729328");
    CHECK(ls[3].substr(0, 14) == "2,0.6181431428");
}

TEST_CASE("zeros json for the delta target") {
    Result r = call({"zeros", "--a", "2", "--target", "delta", "--count", "2",
                     "--format", "json"});
    json j = json::parse(r.out);
    CHECK(j["target"] == "delta");
    REQUIRE(j["zeros"].size() == 2);
    CHECK(std::abs(j["zeros"][0]["x"].get<double>() - 0.46593286842730429486) < 1e-12);
    CHECK(std::abs(j["zeros"][1]["x"].get<double>() - 0.58273247919880893457) < 1e-12);
}

TEST_CASE("sweep produces the expected grid and header") {
    Result r = call({"sweep", "--a", "2", "--from", "0.2", "--to", "0.8",
                     "--points", "4", "--decimals", "3"});
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 5);
    CHECK(ls[0] == "x,f,g,delta,delta0");
    CHECK(ls[1].substr(0, 9) == "2.000e-01");
    CHECK(ls[4].substr(0, 9) == "8.000e-01");
}

TEST_CASE("sweep --log-w spaces points uniformly in ln(1-x)") {
    Result r = call({"sweep", "--a", "2", "--from", "0.5", "--to", "0.9999",
                     "--points", "5", "--format", "json", "--log-w"});
    json j = json::parse(r.out);
    REQUIRE(j["samples"].size() == 5);
    CHECK(j["samples"][0]["x"].get<double>() == 0.5);
    CHECK(j["samples"][4]["x"].get<double>() == 0.9999);
    double s0 = std::log(1.0 - j["samples"][0]["x"].get<double>());
    double s1 = std::log(1.0 - j["samples"][1]["x"].get<double>());
    double s2 = std::log(1.0 - j["samples"][2]["x"].get<double>());
    CHECK(std::abs((s1 - s0) - (s2 - s1)) < 1e-9);
}

TEST_CASE("usage errors exit 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"bogus"}).code == 2);
    CHECK(call({"eval", "--a", "2"}).code == 2);                       // missing --x/--what
    CHECK(call({"eval", "--a", "2", "--x", "0.5", "--what", "h"}).code == 2);
    CHECK(call({"eval", "--a", "2", "--x", "0.5", "--what", "f", "--decimals", "0"}).code == 2);
    CHECK(call({"eval", "--a", "2", "--x", "0.5", "--what", "f", "--decimals", "18"}).code == 2);
    CHECK(call({"eval", "--a", "2", "--x", "0.5", "--what", "f", "--format", "xml"}).code == 2);
    Result r = call({"table", "--a", "2"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
    CHECK(r.out.empty());
}

TEST_CASE("domain errors exit 1 with a message on stderr") {
    Result r = call({"eval", "--a", "1.0", "--x", "0.5", "--what", "f"});
    CHECK(r.code == 1);
    CHECK(r.err.substr(0, 6) == "error:");
    CHECK(call({"eval", "--a", "2", "--x", "0.0", "--what", "f"}).code == 1);
    CHECK(call({"eval", "--a", "2", "--x", "1.0", "--what", "delta"}).code == 1);
    CHECK(call({"table", "--a", "2", "--count", "0"}).code == 1);
    CHECK(call({"table", "--a", "2", "--count", "500"}).code == 1);
    CHECK(call({"sweep", "--a", "2", "--from", "0.8", "--to", "0.2", "--points", "4"}).code == 1);
    CHECK(call({"sweep", "--a", "2", "--from", "0.2", "--to", "0.8", "--points", "1"}).code == 1);
}

TEST_CASE("help exits 0 and prints usage") {
    Result r = call({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
    CHECK(r.err.empty());
}

TEST_CASE("output is deterministic across repeated runs") {
    Result a = call({"table", "--a", "3", "--count", "20"});
    Result b = call({"table", "--a", "3", "--count", "20"});
    CHECK(a.out == b.out);
}
