#include "doctest.h"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

std::string bin()
{
    const char* b = std::getenv("FSK_BIN");
    REQUIRE(b != nullptr);
    return b;
}

Run run(const std::string& args, const std::string& env = "")
{
    std::string cmd = env + " " + bin() + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch(const std::string& name)
{
    fs::path d = fs::temp_directory_path() / ("fsk_cli_" + std::to_string(::getpid())) / name;
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

int count(const std::string& s, const std::string& what)
{
    int c = 0;
    for (std::size_t p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++c;
    return c;
}

}  // namespace

TEST_CASE("gamma as DOT")
{
    auto r = run("gamma --n 5 --variant tilde --format dot");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("digraph", 0) == 0);
    CHECK(count(r.out, "!\"];") == 6);
    auto j = run("gamma --n 5 --variant grid");
    CHECK(Json::parse(j.out)["vertices"].size() == 6);
}

TEST_CASE("check passes for small n")
{
    CHECK(run("check --n-max 3").code == 0);
    auto r = run("check --n-max 6 --json");
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() == 44);
}

TEST_CASE("divide emission and round trip")
{
    auto svg = run("divide --n 5 --emit svg");
    CHECK(svg.code == 0);
    CHECK(svg.out.rfind("<svg", 0) == 0);
    CHECK(count(svg.out, "<circle") == 4);

    auto d = scratch("divide");
    auto js = run("divide --n 7 --emit json");
    REQUIRE(js.code == 0);
    std::ofstream(d / "d7.json") << js.out;
    auto back = run("divide --in " + (d / "d7.json").string());
    CHECK(back.code == 0);
    CHECK(Json::parse(back.out)["summary"]["milnor_number"] == 15);

    auto j = Json::parse(js.out);
    j["segments"][0]["b"] = j["segments"][0]["a"];
    std::ofstream(d / "bad.json") << j.dump();
    CHECK(run("divide --in " + (d / "bad.json").string()).code == 3);
}

TEST_CASE("comb writes one figure per state")
{
    auto d = scratch("comb");
    auto r = run("comb --n 4 --emit-svg " + (d / "svg").string() + " --trace " + (d / "t.json").string());
    CHECK(r.code == 0);
    std::ifstream f(d / "t.json");
    auto t = Json::parse(f);
    CHECK(t["steps"].size() == 3);
    int files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(d / "svg")) ++files;
    CHECK(files == 4);
}

TEST_CASE("deterministic output")
{
    CHECK(run("emit trace --n 7").out == run("emit trace --n 7").out);
    CHECK(run("emit tcomplex --n 5").out == run("emit tcomplex --n 5").out);
    CHECK(run("singular --n 6").out == run("singular --n 6").out);
}

TEST_CASE("tilting and ext through files")
{
    auto d = scratch("ext");
    auto r = run("tilting --n 5 --verify --trace " + (d / "w.json").string());
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["end_iso"]["status"] == "pass");

    auto tc = Json::parse(run("emit tcomplex --n 5").out);
    std::ofstream(d / "alg.json") << tc["algebra"].dump();
    std::ofstream(d / "k.json") << tc["summands"][0].dump();
    std::ofstream(d / "l.json") << tc["summands"][3].dump();
    auto e = run("ext --algebra " + (d / "alg.json").string() + " --K " + (d / "k.json").string() + " --L " +
                 (d / "k.json").string());
    CHECK(e.code == 0);
    CHECK(Json::parse(e.out)["ext"] == Json{{"0", 1}});
    auto e2 = run("ext --algebra " + (d / "alg.json").string() + " --K " + (d / "k.json").string() + " --L " +
                  (d / "l.json").string());
    CHECK(e2.code == 0);
    for (const auto& [deg, dim] : Json::parse(e2.out)["ext"].items())
        if (deg != "0") CHECK(dim == 0);
}

TEST_CASE("singular report and seed override")
{
    auto j = Json::parse(run("singular --n 7 --eps 1 --tol 1e-8 --report json").out);
    CHECK(j["confirmed"] == 15);
    CHECK(j["rejected_diagonal"] == 6);
    CHECK(j["seed"] == 0);
    auto k = Json::parse(run("singular --n 7", "FSK_SEED=9").out);
    CHECK(k["seed"] == 9);
    CHECK(run("singular --n 7", "FSK_SEED=abc").code == 2);
}

TEST_CASE("usage errors")
{
    CHECK(run("emit bogus --n 4").code == 2);
    CHECK(run("emit trace --n 4 --format dot").code == 2);
    CHECK(run("divide").code == 2);
    CHECK(run("gamma --n 2").code != 0);
    CHECK(run("").code != 0);
}
