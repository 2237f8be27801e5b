#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

namespace {

struct Run {
    int code;
    std::string out;
};

// stdout only; stderr is dropped
Run cli(const std::string& args) {
    const std::string cmd = std::string(WHEELER_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf{};
    for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(WHEELER_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    std::filesystem::path path;
    TempDir() : path(std::filesystem::temp_directory_path() / ("wheeler_cli_" + std::to_string(::getpid()))) {
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

bool has(const std::string& text, const std::string& piece) { return text.find(piece) != std::string::npos; }

}  // namespace

TEST_CASE("validate and check-order") {
    auto r = cli("validate " + data("exw.aut"));
    CHECK(r.code == 0);
    CHECK(has(r.out, "valid=true"));
    r = cli("check-order " + data("exw.aut"));
    CHECK(r.code == 0);
    CHECK(has(r.out, "wheeler_order=true"));
    r = cli("check-order " + data("exw.aut") + " --order '0 1 2 3 5 4 6'");
    CHECK(r.code == 1);
    CHECK(has(r.out, "wheeler_order=false"));
    CHECK(has(r.out, "violation: "));
}

TEST_CASE("exit code 2 on bad input") {
    CHECK(cli("validate " + data("bad_state.aut")).code == 2);
    CHECK(cli("validate /nonexistent/x.aut").code == 2);
    CHECK(cli("no-such-command").code == 2);
    CHECK(cli("gen lm -m 9").code == 2);
    CHECK(cli("is-wheeler-language " + data("exw.aut") + " --budget 5").code == 2);
}

TEST_CASE("language decision") {
    auto r = cli("is-wheeler-language " + data("exw.aut"));
    CHECK(r.code == 0);
    CHECK(has(r.out, "wheeler=true min_states=4"));
    r = cli("is-wheeler-language " + data("nw.aut"));
    CHECK(r.code == 1);
    CHECK(has(r.out, "wheeler=false"));
    CHECK(has(r.out, "mu=a nu=c gamma=xx"));
    CHECK(cli("is-wheeler-language " + data("odd.aut")).code == 1);
}

TEST_CASE("automaton decision") {
    auto r = cli("is-wheeler-automaton " + data("exw.aut"));
    CHECK(r.code == 0);
    CHECK(has(r.out, "order=0,1,2,3,4,5,6"));
    r = cli("is-wheeler-automaton " + data("fig_non_wheeler.aut"));
    CHECK(r.code == 1);
    CHECK(has(r.out, "reason=not-reduced"));
    r = cli("is-wheeler-automaton --exhaustive " + data("fig_non_wheeler.aut"));
    CHECK(r.code == 1);
    CHECK(has(r.out, "orders=0"));
}

TEST_CASE("pipelines through files and stdout") {
    TempDir tmp;
    auto r = cli("sort " + data("fig_non_wheeler.aut") + " -o " + (tmp / "q.aut"));
    CHECK(r.code == 0);
    CHECK(has(r.out, "blocks=4"));
    CHECK(cli("check-order " + (tmp / "q.aut")).code == 0);

    r = cli("gen path --word banana");
    CHECK(r.code == 0);
    CHECK(has(r.out, "order: 0 2 4 6 1 3 5"));

    r = cli("gen lm -m 2 -o " + (tmp / "lm.aut"));
    CHECK(has(r.out, "dfa_states=13 wdfa_states=17"));
    r = cli("from-dfa " + (tmp / "lm.aut") + " -o " + (tmp / "lm_w.aut"));
    CHECK(r.code == 0);
    CHECK(has(r.out, "states=17"));
    r = cli("minimize-wdfa " + (tmp / "lm_w.aut") + " -o " + (tmp / "lm_m.aut"));
    CHECK(has(r.out, "states=17"));
    CHECK(slurp(tmp / "lm_m.aut") == slurp(tmp / "lm_w.aut"));
    CHECK(cli("from-dfa " + data("nw.aut")).out == "result=not-wheeler\n");

    r = cli("minimize-dfa " + (tmp / "lm.aut"));
    CHECK(has(r.out, "states: 8"));

    r = cli("determinize " + data("exw.aut"));
    CHECK(r.code == 0);
    CHECK(r.out == slurp(data("exw.aut")));

    r = cli("gen star --word aa -o " + (tmp / "star.aut"));
    CHECK(cli("is-wheeler-language " + (tmp / "star.aut")).code == 1);
    r = cli("gen star --word ab -o " + (tmp / "star.aut"));
    CHECK(cli("is-wheeler-language " + (tmp / "star.aut")).code == 0);

    r = cli("gen interval --kind closed --lo ab --hi ab -o " + (tmp / "iv.aut"));
    r = cli("oracle enum " + (tmp / "iv.aut") + " --max-len 5");
    CHECK(r.out == "count=1\nword: ab\n");

    r = cli("op union-finite " + (tmp / "iv.aut") + " --word ba --word b -o " + (tmp / "u.aut"));
    CHECK(cli("oracle enum " + (tmp / "u.aut")).out == "count=3\nword: ba\nword: b\nword: ab\n");
    r = cli("op concat-finite " + (tmp / "iv.aut") + " --word a");
    CHECK(has(r.out, "states: 4"));
    r = cli("op intersect " + (tmp / "u.aut") + " " + (tmp / "iv.aut"));
    CHECK(has(r.out, "states: 3"));
    r = cli("op pref " + data("exw.aut") + " -o " + (tmp / "p.aut"));
    CHECK(cli("oracle enum " + (tmp / "p.aut") + " --max-len 1").out == "count=3\nword: \nword: a\nword: z\n");
    CHECK(cli("op pref-minus " + data("exw.aut")).code == 0);

    r = cli("gen unary --tail 1 --cycle 2 --final 2");
    CHECK(cli("gen unary --random --seed 4 --states 5").code == 0);
}

TEST_CASE("stdin input") {
    const std::string cmd = "cat " + data("exw.aut") + " | " + WHEELER_CLI + " validate -";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 256> buf{};
    const std::size_t n = fread(buf.data(), 1, buf.size(), p);
    CHECK(WEXITSTATUS(pclose(p)) == 0);
    CHECK(has(std::string(buf.data(), n), "valid=true"));
}

TEST_CASE("oracles and dot") {
    auto r = cli("oracle orders " + data("exw.aut"));
    CHECK(r.out == "orders=1\norder: 0,1,2,3,4,5,6\n");
    r = cli("oracle witness " + data("nw.aut") + " --max-len 4");
    CHECK(r.code == 1);
    CHECK(has(r.out, "witness=found"));
    r = cli("oracle witness " + data("exw.aut") + " --max-len 8");
    CHECK(r.out == "witness=none cap=8\n");
    r = cli("export-dot " + data("exw.aut"));
    CHECK(r.out == slurp(data("exw.dot")));
}
