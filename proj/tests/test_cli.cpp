#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef INVSEMI_CLI_PATH
#error "INVSEMI_CLI_PATH must name the invsemi binary"
#endif

namespace {

  struct Run {
    int         status = -1;
    std::string out;
  };

  Run run(std::string const& args) {
    std::string const cmd = std::string("'") + INVSEMI_CLI_PATH + "' " + args + " 2>/dev/null";
    Run               r;
    FILE*             pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t            got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
      r.out.append(buf.data(), got);
    }
    int const raw = pclose(pipe);
    r.status      = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
  }

  bool has_line(std::string const& text, std::string const& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
      if (l == line) {
        return true;
      }
    }
    return false;
  }

}  // namespace

TEST_CASE("enum") {
  Run const r = run("enum --n 3 --y 0,1");
  CHECK(r.status == 0);
  CHECK(has_line(r.out, "count=6"));
  CHECK(has_line(r.out, "[0 1 0]"));
  CHECK(has_line(run("enum --n 2 --y 0,1 --family fix").out, "count=1"));
  CHECK(run("enum --n 3 --y 3").status == 2);
  CHECK(run("enum --n 3").status == 2);

  auto const j = nlohmann::json::parse(run("enum --n 3 --y 0,1 --format json").out);
  CHECK(j["count"] == 6);
}

TEST_CASE("enum output round-trips through classify") {
  Run const          r = run("enum --n 3 --y 0");
  std::istringstream in(r.out);
  std::string        line;
  std::getline(in, line);
  CHECK(line == "count=9");
  int seen = 0;
  while (std::getline(in, line)) {
    Run const c = run("classify --n 3 --y 0 --f '" + line + "'");
    REQUIRE(c.status == 0);
    auto const j = nlohmann::json::parse(c.out);
    CHECK(j["in_omegabar"] == true);
    ++seen;
  }
  CHECK(seen == 9);
}

TEST_CASE("classify") {
  auto const j = nlohmann::json::parse(run("classify --n 3 --y 0,1 --f '[0 1 0]'").out);
  CHECK(j["in_fix"] == true);
  CHECK(j["regularity"]["regular"] == true);
  CHECK(j["regularity"]["unit_regular"] == true);
  CHECK(j["outside_y_rank"] == 0);
  auto const out = nlohmann::json::parse(run("classify --n 3 --y 0,1 --f '[0 0 2]'").out);
  CHECK(out["in_omegabar"] == false);
  CHECK(out["regularity"].is_null());
  CHECK(run("classify --n 3 --y 0,1 --f '[0 1'").status == 2);
}

TEST_CASE("green") {
  Run const l = run("green --n 3 --y 0,1 --rel L --f '[0 1 0]' --g '[1 0 0]' --witness");
  CHECK(l.status == 0);
  CHECK(has_line(l.out, "related=true"));
  CHECK(has_line(l.out, "oracle=true"));
  CHECK(has_line(l.out, "l_witness_fg=[1 0 1]"));
  Run const j = run("green --n 3 --y 0,1 --rel J --f '[0 1 2]' --g '[0 1 0]'");
  CHECK(has_line(j.out, "related=false"));
  CHECK(has_line(j.out, "oracle=false"));
  CHECK(run("green --n 3 --y 0,1 --rel Q --f '[0 1 2]' --g '[0 1 0]'").status == 2);
}

TEST_CASE("profile") {
  Run const r = run("profile '[w 1 1]' '[w w 1]'");
  CHECK(r.status == 0);
  CHECK(has_line(r.out, "d=false"));
  CHECK(has_line(r.out, "j_pq=true"));
  CHECK(has_line(r.out, "j_qp=true"));
  CHECK(has_line(run("profile --d '[1 2 w]' '[w 1 2]'").out, "d=true"));
  CHECK(run("profile '[w 1' '[w]'").status == 2);
}

TEST_CASE("eggbox, ideals and kernel") {
  Run const text = run("eggbox --n 3 --y 0,1");
  CHECK(text.status == 0);
  CHECK(text.out.find("d_classes=2") != std::string::npos);
  CHECK(run("eggbox --n 3 --y 0,1 --format dot").out.rfind("digraph", 0) == 0);

  auto const ideals = nlohmann::json::parse(run("ideals --n 4 --y 0,1").out);
  CHECK(ideals["count"] == 3);
  CHECK(run("ideals --n 4 --y 0,1 --s w --t 9").status == 2);

  CHECK(has_line(run("kernel --n 3 --y 0,1 --format text").out, "count=4"));
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify --max-n 1 --no-sample-n5").status == 0);
  CHECK(run("verify --max-n 6 --no-sample-n5").status == 3);
  Run const mutant = run("verify --max-n 3 --no-sample-n5 --inject-mutant flip-compose --out /dev/null");
  CHECK(mutant.status == 1);
  CHECK(mutant.out.find("FAIL thm.L_char") != std::string::npos);
}
