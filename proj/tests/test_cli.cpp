#include <catch2/catch.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <severi/store.hpp>

#ifndef SEVERI_CLI_PATH
#error "SEVERI_CLI_PATH must point at the built severi binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(SEVERI_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

std::string temp_path(const std::string& name) {
    const char* dir = std::getenv("TMPDIR");
    return std::string(dir ? dir : "/tmp") + "/" + name;
}

} // namespace

TEST_CASE("count subcommand") {
    auto r = run_cli("count --surface p2 --class 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "12\n");

    r = run_cli("count --surface f2 --class 2,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "10\n");

    r = run_cli("count --surface q --class 2,2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "12\n");

    r = run_cli("count --surface f3 --class 2,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "69\n");
}

TEST_CASE("count errors") {
    // the excluded class E gets an explanation, not a number
    auto r = run_cli("count --surface f2 --class 1,-2");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("E") != std::string::npos);

    // no recursion reaches this class; that is missing data, exit 3
    r = run_cli("count --surface f3 --class 3,1");
    CHECK(r.exit_code == 3);

    // tangential degrees without a table are missing data too
    r = run_cli("count --surface f3 --class 1,2 --tangency 2");
    CHECK(r.exit_code == 3);

    // usage problems
    CHECK(run_cli("count --surface p2").exit_code == 1);
    CHECK(run_cli("count --surface nowhere --class 1").exit_code == 1);
    CHECK(run_cli("count --surface p2 --class 1,2").exit_code == 1);
    CHECK(run_cli("nonsense --surface p2").exit_code == 1);
    CHECK(run_cli("--frobnicate").exit_code == 1);
}

TEST_CASE("help exits zero") {
    auto r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("count") != std::string::npos);
}

TEST_CASE("table subcommand formats") {
    auto text = run_cli("table --surface f2 --max-c 2 --max-f 1");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("N(D) on F2") != std::string::npos);
    CHECK(text.output.find("10") != std::string::npos);

    auto csv = run_cli("table --surface f2 --max-c 2 --max-f 1 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.find("surface,coords,i,value") != std::string::npos);
    CHECK(csv.output.find("F2,\"2,0\",1,10") != std::string::npos);

    auto json = run_cli("table --surface f2 --max-c 2 --max-f 1 --format json");
    CHECK(json.exit_code == 0);
    auto parsed = nlohmann::json::parse(json.output, nullptr, false);
    REQUIRE_FALSE(parsed.is_discarded());
    bool found = false;
    for (const auto& record : parsed)
        if (record["coords"] == nlohmann::json::array({2, 0})) {
            CHECK(record["value"] == "10");
            found = true;
        }
    CHECK(found);

    auto p2 = run_cli("table --surface p2 --max-d 4");
    CHECK(p2.exit_code == 0);
    CHECK(p2.output.find("620") != std::string::npos);

    CHECK(run_cli("table --surface f2 --max-c 2").exit_code == 1);
    CHECK(run_cli("table --surface f2 --max-c 2 --max-f 1 --format yaml").exit_code == 1);
}

TEST_CASE("identical invocations are byte-identical") {
    auto first = run_cli("table --surface f2 --max-c 3 --max-f 2 --format csv");
    auto second = run_cli("table --surface f2 --max-c 3 --max-f 2 --format csv");
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    auto ledger_one = run_cli("ledger --n 4");
    auto ledger_two = run_cli("ledger --n 4");
    CHECK(ledger_one.output == ledger_two.output);
}

TEST_CASE("verify-2c subcommand") {
    auto r = run_cli("verify-2c --n 2 --through 50");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n=2 N(2C)=10 ok") != std::string::npos);
    CHECK(r.output.find("MISMATCH") == std::string::npos);

    CHECK(run_cli("verify-2c --n 0").exit_code == 1);
    CHECK(run_cli("verify-2c --n 5 --through 3").exit_code == 1);
}

TEST_CASE("ledger subcommand") {
    auto r = run_cli("ledger --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("2*N + 40 = 60") != std::string::npos);
    CHECK(r.output.find("N(2C) = 10") != std::string::npos);

    auto json = run_cli("ledger --n 3 --format json");
    CHECK(json.exit_code == 0);
    auto parsed = nlohmann::json::parse(json.output, nullptr, false);
    REQUIRE_FALSE(parsed.is_discarded());
    CHECK(parsed["solved"] == "69");
}

TEST_CASE("fn-rhs subcommand") {
    auto r = run_cli("fn-rhs --n 2 --class 2,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("rhs = -72") != std::string::npos);
    CHECK(r.output.find("rhs/n = -36") != std::string::npos);

    // missing tangential data on F3
    CHECK(run_cli("fn-rhs --n 3 --class 2,0").exit_code == 3);

    // with the needed contact-order-2 degrees supplied, the evaluation runs
    // and a non-integral quotient prints as an exact fraction
    std::string path = temp_path("severi_cli_fnrhs_test.ntab");
    {
        std::ofstream out(path);
        out << "{\"surface\":\"F3\",\"coords\":[0,1],\"i\":2,\"value\":\"0\",\"provenance\":\"external\"}\n"
            << "{\"surface\":\"F3\",\"coords\":[1,2],\"i\":2,\"value\":\"0\",\"provenance\":\"external\"}\n";
    }
    r = run_cli("fn-rhs --n 3 --class 2,0 --tangential " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("rhs = -920") != std::string::npos);
    CHECK(r.output.find("rhs/n = -920/3") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cache threading") {
    std::string path = temp_path("severi_cli_cache_test.ntab");
    std::remove(path.c_str());

    auto first = run_cli("count --surface f2 --class 2,0 --save " + path);
    REQUIRE(first.exit_code == 0);

    {
        std::ifstream in(path);
        REQUIRE(in.good());
        severi::NTable table = severi::load_table(in);
        auto* entry = table.find(severi::ruled_class(severi::Surface::hirzebruch(2), 2, 0), 1);
        REQUIRE(entry != nullptr);
        CHECK(entry->value == 10);
    }

    auto reload = run_cli("count --surface f2 --class 2,0 --load " + path);
    CHECK(reload.exit_code == 0);
    CHECK(reload.output == "10\n");

    auto stats = run_cli("cache --load " + path);
    CHECK(stats.exit_code == 0);
    CHECK(stats.output.find("entries:") != std::string::npos);

    std::string copy = temp_path("severi_cli_cache_copy.ntab");
    std::remove(copy.c_str());
    CHECK(run_cli("cache --load " + path + " --save " + copy).exit_code == 0);
    std::ifstream a(path), b(copy);
    std::string text_a((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string text_b((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(text_a == text_b);

    std::remove(path.c_str());
    std::remove(copy.c_str());

    CHECK(run_cli("cache --load /nonexistent/severi.ntab").exit_code == 1);
}

TEST_CASE("tangential table feeds count --tangency") {
    std::string path = temp_path("severi_cli_tangential_test.ntab");
    {
        std::ofstream out(path);
        out << "{\"surface\":\"F3\",\"coords\":[1,2],\"i\":2,\"value\":\"5\",\"provenance\":\"external\"}\n";
    }
    auto r = run_cli("count --surface f3 --class 1,2 --tangency 2 --tangential " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "5\n");
    std::remove(path.c_str());
}
