#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ritt/cli.hpp"

namespace {
struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "ritt");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = ritt::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

void check_shape(const nlohmann::json& j) {
    REQUIRE(j.is_object());
    CHECK(j.at("command").is_string());
    CHECK(j.at("inputs").is_object());
    CHECK(j.contains("results"));
    CHECK(j.at("verdict").is_string());
    for (const auto& c : j.at("checks")) {
        CHECK(c.at("name").is_string());
        CHECK(c.at("pass").is_boolean());
        CHECK(c.at("detail").is_string());
    }
}
}  // namespace

TEST_CASE("cli examples") {
    const auto d = run({"decompose", "z^6"});
    CHECK(d.code == ritt::kExitOk);
    CHECK(d.out.find("(z^2) . (z^3)") != std::string::npos);
    CHECK(d.out.find("(z^3) . (z^2)") != std::string::npos);

    const auto c = run({"char", "--kind", "length", "z^8"});
    CHECK(c.code == 0);
    CHECK(c.out.find("e^3") != std::string::npos);

    const auto cm = run({"compose", "z^2", "z+1"});
    CHECK(cm.code == 0);
    CHECK(cm.out.find("z^2 + 2*z + 1") != std::string::npos);

    const auto f = run({"feasible", "2", "3"});
    CHECK(f.code == 0);
}

TEST_CASE("cli exit codes") {
    CHECK(run({}).code == ritt::kExitUsage);
    CHECK(run({"decompose"}).code == ritt::kExitUsage);
    CHECK(run({"char", "--kind", "nope", "z^2"}).code == ritt::kExitUsage);
    CHECK(run({"--help"}).code == ritt::kExitOk);
    const auto syn = run({"decompose", "z^"});
    CHECK(syn.code == ritt::kExitDomainError);
    CHECK(syn.err.find("position 2") != std::string::npos);
    CHECK(run({"verify", "--fixture", "nope"}).code == ritt::kExitDomainError);
    CHECK(run({"feasible", "2", "2"}).code == ritt::kExitDomainError);
    CHECK(run({"char", "--kind", "affine-leading", "z^2"}).code == ritt::kExitDomainError);
    CHECK(run({"verify", "--fixture", "chebyshev(3)"}).code == ritt::kExitOk);
    CHECK(run({"verify", "--fixture", "bergweiler"}).code == ritt::kExitVerificationFailed);
    CHECK(run({"extend", "--kind", "obstruction", "--fixture", "length-bergweiler"}).code == ritt::kExitOk);
    CHECK(run({"extend", "--kind", "obstruction", "--fixture", "phi2-s4"}).code == ritt::kExitVerificationFailed);
    CHECK(run({"graph", "(z^2+z)^2", "--budget", "1"}).code == ritt::kExitVerificationFailed);
}

TEST_CASE("cli json reports") {
    const std::vector<std::vector<std::string>> cmds = {
        {"decompose", "z^12", "--json"},
        {"compose", "z^2", "(z^2+1)/(2*z)", "--json"},
        {"char", "--kind", "power-class", "--p", "3", "(z-1)^3+2", "--json"},
        {"verify", "--fixture", "bergweiler", "--json"},
        {"verify", "--fixture", "moebius-chain-2", "--json"},
        {"extend", "--kind", "ideal", "--char", "deg", "--witness", "z^4", "--witness", "z^6", "z^3+z", "--json"},
        {"extend", "--kind", "square", "--char", "length", "z^2", "--json"},
        {"extend", "--kind", "obstruction", "--fixture", "phi1-chebyshev(5)", "--json"},
        {"graph", "z^6", "--json"},
        {"feasible", "2", "3", "--kmax", "5", "--json"},
    };
    for (const auto& cmd : cmds) {
        INFO(cmd.front());
        const auto a = run(cmd), b = run(cmd);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
        const auto j = nlohmann::json::parse(a.out);
        check_shape(j);
        CHECK(j.at("command") == cmd.front());
    }
    const auto v = nlohmann::json::parse(run({"verify", "--fixture", "bergweiler", "--json"}).out);
    CHECK(v.at("verdict") == "failed");
    bool chains = false;
    for (const auto& c : v.at("checks"))
        if (c.at("name") == "chain 1 equals chain 2") chains = c.at("pass").get<bool>();
    CHECK(chains);
    const auto e = nlohmann::json::parse(
        run({"extend", "--kind", "ideal", "--char", "deg", "--witness", "z^4", "z^3+z", "--json"}).out);
    CHECK(e.at("results").at("value") == "3");
}

TEST_CASE("cli dot output") {
    const std::string path = "test_cli_gamma.dot";
    CHECK(run({"graph", "z^4", "--dot", path}).code == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("digraph") != std::string::npos);
    std::remove(path.c_str());
}
