#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <functional>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

// Black-box runs of the built binary; path comes from the build.
#ifndef FERMATINV_CLI
#error "FERMATINV_CLI must name the fermatinv executable"
#endif

namespace {

struct Run
{
    int code = -1;
    std::string out;
};

Run run(std::string const & args, std::string const & env = "")
{
    std::string cmd = env + (env.empty() ? "" : " ") + FERMATINV_CLI + std::string(" ") + args + " 2>/dev/null";
    Run r;
    FILE * f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0)
        r.out.append(buf, n);
    int status = pclose(f);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(std::string const & s)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start < s.size()) {
        auto end = s.find('\n', start);
        if (end == std::string::npos)
            end = s.size();
        out.push_back(s.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

using nlohmann::ordered_json;

} // namespace

TEST_CASE("exit codes")
{
    CHECK(run("").code == 2);
    CHECK(run("bogus").code == 2);
    CHECK(run("invariant --p 5").code == 2);
    CHECK(run("invariant --p 4 --u -2").code == 2);
    CHECK(run("invariant --p 5 --u 3").code == 2);
    CHECK(run("classgroup --d 5").code == 2);
    CHECK(run("invariant --p 5 --u -5", "FERMATINV_FACTOR_BOUND=10").code == 3);
    CHECK(run("wieferich --base 2 --bound 5000").code == 0);
}

TEST_CASE("text output")
{
    auto w = run("wieferich --base 2 --bound 5000");
    CHECK(w.out.find("1093") != std::string::npos);
    CHECK(w.out.find("3511") != std::string::npos);
    auto o = run("order --p 5 --point Q");
    CHECK(o.code == 0);
    CHECK(o.out.find("order  5") != std::string::npos);
}

TEST_CASE("json reports")
{
    auto r = run("invariant --p 5 --u -2 --json");
    REQUIRE(r.code == 0);
    auto j = ordered_json::parse(r.out);
    CHECK(j["command"] == "invariant");
    CHECK(j["inputs"]["u"] == "-2");
    CHECK(j["elapsed_ms"].is_number_integer());
    auto const & res = j["result"];
    std::vector<std::string> keys;
    for (auto it = res.begin(); it != res.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"p", "u", "d", "h", "a", "class_of_a", "p_splitting",
                                           "s_quotient_order", "c_order", "psi_tuple_orders", "nonvanishing",
                                           "infinite_order"});
    CHECK(res["d"] == "-127");
    CHECK(res["h"] == "5");
    CHECK(res["class_of_a"] == ordered_json({"2", "1", "16"}));
    CHECK(res["p_splitting"] == "inert");
    CHECK(res["nonvanishing"] == true);
    CHECK(res["infinite_order"] == "proven");

    // no floating point anywhere
    for (std::string args : {"classgroup --d -23", "ramification --p 5 --l 2", "kummer-count --p 7",
                             "irregular --p 37", "cyclotomic-units --p 7", "jacobian-count --p 5 --q 7",
                             "two-torsion --f 0,24,-50,35,-10,1", "curve --p 5", "good-reduction-field --p 1093",
                             "hensel --p 5 --coeffs -7,0,0,0,0,1 --x0 2 --target 3"}) {
        auto rr = run(args + " --json");
        CHECK_MESSAGE(rr.code == 0, args);
        bool has_float = false;
        std::function<void(ordered_json const &)> walk = [&](ordered_json const & x) {
            has_float = has_float || x.is_number_float();
            if (x.is_structured())
                for (auto const & y : x)
                    walk(y);
        };
        walk(ordered_json::parse(rr.out));
        CHECK_MESSAGE(!has_float, args);
    }
}

TEST_CASE("search stream")
{
    auto one = run("search --p 5 --umin -2 --umax -2 --json");
    REQUIRE(one.code == 0);
    auto l1 = lines(one.out);
    REQUIRE(l1.size() == 2);
    CHECK(ordered_json::parse(l1[0])["d"] == "-127");
    CHECK(ordered_json::parse(l1[1]) == ordered_json{{"tested", 1}, {"witnesses", 1}, {"skipped", 0}});

    auto unit = run("search --p 5 --umin -1 --umax -1 --json");
    auto lu = lines(unit.out);
    REQUIRE(lu.size() == 1);
    CHECK(ordered_json::parse(lu[0])["tested"] == 1);

    auto w1 = run("search --p 5 --umin -12 --umax -1 --json --workers 1");
    auto w4 = run("search --p 5 --umin -12 --umax -1 --json --workers 4");
    CHECK(w1.code == 0);
    CHECK(w1.out == w4.out);

    // u ascending in |u|
    long last = 0;
    for (auto const & ln : lines(w1.out)) {
        auto j = ordered_json::parse(ln);
        if (!j.contains("u"))
            continue;
        long u = std::stol(j["u"].get<std::string>());
        CHECK(-u > last);
        last = -u;
    }

    // resuming at -5 reproduces the tail of the full run
    auto tail = run("search --p 5 --umin -12 --umax -1 --json --resume-from -5");
    auto full = lines(w1.out);
    auto part = lines(tail.out);
    REQUIRE(!part.empty());
    std::vector<std::string> expect;
    for (auto const & ln : full) {
        auto j = ordered_json::parse(ln);
        if (j.contains("u") && std::stol(j["u"].get<std::string>()) <= -5)
            expect.push_back(ln);
    }
    CHECK(std::vector<std::string>(part.begin(), part.end() - 1) == expect);

    // skipped candidates are reported, never dropped
    auto sk = run("search --p 5 --umin -6 --umax -1 --json", "FERMATINV_FACTOR_BOUND=10");
    auto ls = lines(sk.out);
    int skipped = 0;
    for (auto const & ln : ls)
        skipped += ordered_json::parse(ln).contains("skipped") && ln.find("\"tested\"") == std::string::npos;
    auto footer = ordered_json::parse(ls.back());
    CHECK(footer["tested"] == 6);
    CHECK(footer["skipped"] == skipped);
    CHECK(skipped > 0);
}
