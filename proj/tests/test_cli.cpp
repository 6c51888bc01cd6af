#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CmdResult {
    int code;
    std::string out;
};

// Runs the built CLI binary and captures stdout (stderr folded in).
CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(FFC_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

size_t count_lines(const std::string& s) {
    size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

// The embedded config echoes the worker count; strip that one line when
// comparing runs that differ only in --workers.
std::string drop_workers_line(std::string s) {
    auto pos = s.find("\"workers\":");
    if (pos == std::string::npos) return s;
    auto start = s.rfind('\n', pos);
    auto end = s.find('\n', pos);
    s.erase(start, end - start);
    return s;
}

} // namespace

TEST_CASE("places: q+1 rows at degree 1, 16 rows at degree 2") {
    auto r1 = run_cli("places --q 5 --cover kummer:2:x --deg 1 --format csv");
    CHECK(r1.code == 0);
    CHECK(count_lines(r1.out) == 7); // header + 6 places
    auto r2 = run_cli("places --q 5 --cover kummer:2:x --deg 2 --format csv");
    CHECK(r2.code == 0);
    CHECK(count_lines(r2.out) == 17); // header + 16 places
}

TEST_CASE("invalid cover exits 2 with a machine-readable reason") {
    auto r = run_cli("places --q 5 --cover kummer:2:x^2 --deg 1");
    CHECK(r.code == 2);
    CHECK(r.out.find("NotGeometric") != std::string::npos);
    auto r2 = run_cli("verify --q 12 --cover kummer:2:x");
    CHECK(r2.code == 2);
}

TEST_CASE("verify passes on the acceptance covers") {
    CHECK(run_cli("verify --q 5 --cover kummer:2:x --gamma all --format json").code == 0);
    CHECK(run_cli("verify --q 5 --cover kummer:2:x^3+x --gamma all").code == 0);
    CHECK(run_cli("verify --q 5 --cover as:x^3 --gamma all --oracle").code == 0);
    CHECK(run_cli("verify --q 9 --cover compose:[kummer:2:x,const:2] --gamma all").code == 0);
    CHECK(run_cli("verify --q 5 --cover kummer:2:x --gamma 1").code == 0);
    // gamma outside the coset: configuration error
    CHECK(run_cli("verify --q 5 --cover const:3 --gamma 2").code == 2);
}

TEST_CASE("identical config and seed give byte-identical output") {
    std::string args = "verify --q 9 --cover kummer:4:x --gamma all --format json --seed 11";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    // worker count must not affect the data (only its own config echo)
    auto c = run_cli(args + " --workers 4");
    CHECK(drop_workers_line(c.out) == drop_workers_line(a.out));

    std::string pl = "places --q 9 --cover compose:[kummer:2:x,const:2] --deg 2 --format json";
    CHECK(drop_workers_line(run_cli(pl).out) == drop_workers_line(run_cli(pl + " --workers 3").out));
}

TEST_CASE("base field flags: --p/--k and conflicts") {
    CHECK(run_cli("verify --p 3 --k 2 --cover kummer:2:x --gamma all").code == 0);
    CHECK(run_cli("verify --q 9 --p 3 --cover kummer:2:x").code == 2);   // both given
    CHECK(run_cli("verify --cover kummer:2:x").code == 2);               // neither given
}

TEST_CASE("abstract runs across the library") {
    CHECK(run_cli("abstract --group S3 --trials 50 --seed 7").code == 0);
    CHECK(run_cli("abstract --group Q8 --trials 50").code == 0);
    auto r = run_cli("abstract --group Z6 --trials 10 --format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"status\": \"ok\"") != std::string::npos);
    CHECK(run_cli("abstract --group E9 --trials 1").code == 2);
}
