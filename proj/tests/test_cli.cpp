// Runs the kleind binary end to end.
#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "kleind/json_io.hpp"

#ifndef KLEIND_CLI_PATH
#error "KLEIND_CLI_PATH must point at the kleind binary"
#endif

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(KLEIND_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "kleind_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("phi") {
  Run r = run("--q 0,0,0,0,1 phi u");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"terms":[{"k":0,"eps":0,"num":"0,0,1","den":"1"}]})"));
  r = run("--q 0,0,0,0,1 phi 'u*v - v*u - 2*w - v'");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"terms":[]})"));
  CHECK(run("--q 0,0,0,0,1 phi 'u*'").code == 2);
}

TEST_CASE("emitted elements re-parse to equal values") {
  const kleind::Embedding emb(kleind::params_from_q(kleind::Polynomial::parse("1,1,0,0,1")));
  for (const char* expr : {"v", "w", "u*w - 3/2*v*v", "w*v*u"}) {
    const Run r = run(std::string("--q 1,1,0,0,1 phi '") + expr + "'");
    REQUIRE(r.code == 0);
    const auto value = json::parse(r.out).get<kleind::SkewElement>();
    CHECK(value == emb.phi(kleind::FreeExpression::parse(expr)));
    CHECK(json(value) == json::parse(r.out));
    const Run nf = run(std::string("--q 1,1,0,0,1 nf '") + expr + "'");
    REQUIRE(nf.code == 0);
    const auto form = json::parse(nf.out).get<kleind::PbwForm>();
    CHECK(emb.phi(form.to_expression()) == value);
  }
  const Run act = run("--q 0,0,0,0,1 act --generator w --point 1/2 --order 0");
  REQUIRE(act.code == 0);
  const auto d = json::parse(act.out).get<kleind::Distribution>();
  CHECK(d.coeff(kleind::Tableau{1, kleind::Rational(1, 2)}) == kleind::Rational(1, 16));
  CHECK(json(d) == json::parse(act.out));
}

TEST_CASE("verify exit codes") {
  CHECK(run("--q 0,0,0,0,1 verify --only relations").code == 0);
  const Run all = run("--q 0,0,0,0,1 verify --max-deg 10");
  CHECK(all.code == 1);  // the four-fold braid relation fails
  int failing = 0;
  for (const auto& entry : json::parse(all.out)) {
    if (!entry["pass"].get<bool>()) {
      ++failing;
      CHECK(entry["identity"] == "s0 s1 s0 s1 = s1 s0 s1 s0");
    }
  }
  CHECK(failing == 1);
  const Run nil = run("--q 0,0,0,0,1 verify --only nilhecke");
  CHECK(nil.code == 1);
  for (const auto& entry : json::parse(nil.out)) CHECK(entry["suite"] == "nilhecke");
  CHECK(run("--q 0,0,0,1 verify").code == 2);
  CHECK(run("--q 0,0,0,0,1 verify --only bogus").code == 2);
  CHECK(run("verify").code == 2);
  CHECK(run("--q 0,0,0,0,1").code == 2);
}

TEST_CASE("flag report") {
  const Run r = run("--q 4,0,-5,0,1 flag");
  CHECK(r.code == 1);
  CHECK(json::parse(r.out).size() > 10);
}

TEST_CASE("act") {
  Run r = run("--q 0,0,0,0,1 act --generator half_v_plus_w --point 1/3");
  CHECK(r.code == 0);
  const json expected = json::parse(R"([{"order":0,"point":"2/3","coeff":"-1/54"},
                                        {"order":0,"point":"4/3","coeff":"1/54"}])");
  CHECK(json::parse(r.out) == expected);
  r = run("--q 0,0,0,0,1 act --generator half_v_plus_w --point 1/3 --oracle");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == expected);
  CHECK(run("--q 0,0,0,0,1 act --generator 'v*v' --point 1/3 --oracle").code == 1);
  CHECK(run("--q 0,0,0,0,1 act --generator 'v*v' --point 1/3 --oracle --radius 2").code == 0);
  CHECK(run("--q 0,0,0,0,1 act --generator x --point 1/3").code == 2);
  CHECK(run("--q 0,0,0,0,1 act --generator u --point 1/3 --order 2").code == 2);
}

TEST_CASE("graph") {
  Run r = run("--q 4,0,-5,0,1 graph --orbit 0 --window 8 --format json");
  REQUIRE(r.code == 0);
  const json g = json::parse(r.out);
  CHECK(g["orbit_class"] == "integral");
  auto point_of = [&](int i) { return g["vertices"][i]["point"].get<std::string>(); };
  bool has_1_2 = false, has_3_4 = false;
  for (const auto& e : g["edges"]) {
    if (g["vertices"][e["src"].get<int>()]["order"] != 0 || g["vertices"][e["dst"].get<int>()]["order"] != 0) continue;
    const std::string s = point_of(e["src"]), t = point_of(e["dst"]);
    has_1_2 = has_1_2 || (s == "1" && t == "2") || (s == "2" && t == "3");
    has_3_4 = has_3_4 || (s == "3" && t == "4");
  }
  CHECK_FALSE(has_1_2);
  CHECK(has_3_4);

  r = run("--q 4,0,-5,0,1 graph --orbit 1/2 --window 6 --symbolic");
  CHECK(r.code == 0);
  CHECK(r.out.find("q(-1/2)") != std::string::npos);
  CHECK(run("--q 4,0,-5,0,1 graph --orbit 1/3 --window 1").code == 2);
  CHECK(run("--q 4,0,-5,0,1 graph --orbit 1/3 --window 6 --format svg").code == 2);
}

TEST_CASE("output files") {
  const auto path = scratch("graph.dot");
  std::filesystem::remove(path);
  const Run r = run("--q 0,0,0,0,1 --out " + path.string() + " graph --orbit 1/3 --window 4");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().rfind("digraph", 0) == 0);
  CHECK(run("--q 0,0,0,0,1 --out /nonexistent/dir/x.json phi u").code == 2);
}
