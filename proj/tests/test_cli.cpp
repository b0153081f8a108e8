// Runs the dihedral executable as a subprocess.
#include "doctest.h"

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& exe, const std::string& args) {
    const std::string command = "NO_COLOR=1 " + exe + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Run cli(const std::string& args) { return run(DIHEDRAL_CLI, args); }

void round_trips(const std::string& text) {
    const auto parsed = nlohmann::ordered_json::parse(text);
    CHECK(parsed.dump(2) + "\n" == text);
}

} // namespace

TEST_CASE("dim") {
    CHECK(cli("dim --n 3 --d 3 --char psi:1").out == "6\n");
    CHECK(cli("dim --n 4 --d 2 --char chi1").out == "3\n");
    CHECK(cli("dim --n 5 --d 0 --char chi2").out == "0\n");
    CHECK(cli("dim --n 4 --d 2 --char chi3 --method rank").out == "1\n");
    CHECK(cli("dim --n 4 --d 2 --char chi4 --method char-sum").out == "2\n");
}

TEST_CASE("exit codes") {
    CHECK(cli("dim --n 3 --d 3 --char psi:1").code == 0);
    CHECK(cli("dim --n 5 --d 2 --char chi3").code == 2);
    CHECK(cli("dim --n 2 --d 2 --char chi1").code == 2);
    CHECK(cli("dim --n 5 --d 1..0 --char chi1").code == 2);
    CHECK(cli("dim --n 5 --d 2 --char chi1 --method guess").code == 2);
    CHECK(cli("dim --n 5 --d 2 --char chi1 --format xml").code == 2);
    CHECK(cli("frobnicate").code == 2);
    CHECK(cli("").code == 2);
    CHECK(cli("--help").code == 0);
    CHECK(cli("dim --n 10 --d 6 --char chi1 --method rank").code == 3);
    CHECK(cli("dim --n 10 --d 3 --char chi1 --method rank --cap 100").code == 3);
    CHECK(cli("dim --n 300 --d 300 --char chi1").code == 3);
    CHECK(run(DIHEDRAL_FAULTY_CLI, "verify").code == 1);
}

TEST_CASE("table") {
    const Run t = cli("table --n 4 --dmax 2 --format csv");
    CHECK(t.code == 0);
    CHECK(t.out ==
          "n,d,chi1,chi2,chi3,chi4,psi:1,total,monomials\n"
          "4,0,1,0,0,0,0,1,1\n"
          "4,1,1,0,0,1,2,4,4\n"
          "4,2,3,0,1,2,4,10,10\n");

    const auto j = nlohmann::json::parse(cli("table --n 10 --dmax 1 --format json").out);
    for (const char* psi : {"psi:1", "psi:2", "psi:3", "psi:4"}) CHECK(j[1]["dims"][psi] == 2);

    const auto j3 = nlohmann::json::parse(cli("table --n 3 --dmax 0 --format json").out);
    CHECK(j3.size() == 1);
    CHECK(j3[0]["dims"]["chi1"] == 1);
    CHECK(j3[0]["dims"]["chi2"] == 0);
    CHECK(j3[0]["dims"]["psi:1"] == 0);
}

TEST_CASE("series") {
    CHECK(cli("series --n 10 --char psi:1 --order 2").out == "[0, 2, 10]\n");
    CHECK(cli("series --n 3 --char chi1 --order 2").out == "[1, 1, 2]\n");

    const Run paper = cli("series --n 4 --char chi1 --order 2 --paper-form --format json");
    CHECK(paper.code == 0);
    const auto j = nlohmann::json::parse(paper.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["label"] == "chi1");
    CHECK(j[0]["first_divergence"] == 2);
    CHECK(j[0]["printed"][2] == "13/4");
    CHECK(j[0]["expected"][2] == "3");
    CHECK(cli("series --n 4 --char chi1 --order 2 --paper-form").out.find("first divergence at d = 2") !=
          std::string::npos);
}

TEST_CASE("verify") {
    const Run all = cli("verify --n 3..8 --d 0..10");
    CHECK(all.code == 0);
    CHECK(all.out.find("PASS") != std::string::npos);

    const Run ranked = cli("verify --n 3..4 --d 0..4 --with-rank --format json");
    CHECK(ranked.code == 0);
    const auto j = nlohmann::json::parse(ranked.out);
    CHECK(j["status"] == "pass");
    CHECK(j["rank_checked"] == j["cells"]);

    const Run faulty = run(DIHEDRAL_FAULTY_CLI, "verify --format json");
    CHECK(faulty.code == 1);
    const auto f = nlohmann::json::parse(faulty.out);
    REQUIRE(f["failures"].size() > 0);
    const auto& record = f["failures"][0];
    for (const char* key : {"n", "d", "char", "dim", "method", "expected", "got", "oracle"}) {
        CHECK(record.contains(key));
    }
    CHECK(record["n"].get<int>() % 5 == 0);
}

TEST_CASE("parallel and serial verify agree") {
    for (const char* format : {"plain", "json", "csv"}) {
        const std::string args = std::string("verify --n 3..9 --d 0..9 --format ") + format;
        const Run serial = cli(args + " --jobs 1");
        const Run parallel = cli(args + " --jobs 4");
        CHECK(serial.code == 0);
        CHECK(serial.out == parallel.out);
    }
    const Run serial = run(DIHEDRAL_FAULTY_CLI, "verify --format json --jobs 1");
    const Run parallel = run(DIHEDRAL_FAULTY_CLI, "verify --format json --jobs 4");
    CHECK(serial.out == parallel.out);
}

TEST_CASE("scan-positivity") {
    const auto j = nlohmann::json::parse(cli("scan-positivity --n 3..8 --d 1..10 --format json").out);
    for (int n = 3; n <= 8; ++n) {
        bool found = false;
        for (const auto& z : j["zeros"]) found = found || (z["n"] == n && z["d"] == 1 && z["char"] == "chi2");
        CHECK(found);
    }
    for (const auto& z : j["zeros"]) CHECK(z["d"].get<int>() >= 1);

    const auto primes = nlohmann::json::parse(cli("scan-positivity --n 3,5,7 --d 1..10 --char psi --format json").out);
    CHECK(primes["zeros"].empty());

    const auto with_zero = nlohmann::json::parse(cli("scan-positivity --n 3 --d 0..2 --format json").out);
    for (const auto& z : with_zero["zeros"]) CHECK(z["d"].get<int>() >= 1);
}

TEST_CASE("json output round-trips") {
    for (const char* args : {"dim --n 3..5 --d 0..3 --format json",
                             "table --n 6 --dmax 4 --format json",
                             "series --n 6 --char all --order 5 --format json",
                             "series --n 4 --order 6 --paper-form --format json",
                             "verify --n 3..5 --d 0..5 --format json",
                             "scan-positivity --n 3..6 --d 1..5 --format json"}) {
        CAPTURE(args);
        const Run r = cli(args);
        CHECK(r.code == 0);
        round_trips(r.out);
    }
    const Run faulty = run(DIHEDRAL_FAULTY_CLI, "verify --format json");
    round_trips(faulty.out);
}
