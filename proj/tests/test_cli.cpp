#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(WSA_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::json result_of(const Run& r) { return nlohmann::json::parse(r.out).at("result"); }

}  // namespace

TEST_CASE("verify osp(1|2)") {
  auto r = run("verify --algebra 'osp:1|2'");
  auto j = result_of(r);
  CHECK(j["c0"] == "-1/16");
  CHECK(j["epsilon"] == "1/16");
  // the only failing identity is the [v,e] relation carrying c0
  std::vector<std::string> failed;
  for (const auto& c : j["relations"])
    if (!c["pass"].get<bool>()) failed.push_back(c["name"]);
  CHECK(failed == std::vector<std::string>{"[Th_ve,Th_ve]", "Th_[v,e]^2 expansion"});
  CHECK(r.code == (failed.empty() ? 0 : 1));
  for (const auto& c : j["whittaker"]) CHECK(c["pass"].get<bool>());
}

TEST_CASE("unsupported input") {
  auto r = run("verify --algebra G3", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("unsupported family") != std::string::npos);
  CHECK(run("verify --algebra 'sl:2|1' --bogus 1").code == 2);
  CHECK(run("verify --algebra 'gl:1|1'").code == 2);
}

TEST_CASE("module reports") {
  auto r = run("module --algebra 'osp:1|2' --lambda '[]'");
  REQUIRE(r.code == 0);
  auto j = result_of(r);
  REQUIRE(j["dims"].size() == 1);
  CHECK(j["dims"][0]["dim"] == 2);
  CHECK(j["dims"][0]["weight"].empty());
  CHECK(j["psi_C"] == "-1/16");
  CHECK(j["type_q"] == true);

  auto a = run("module --algebra 'spo:2|3' --lambda 1 --truncate 3");
  auto b = run("module --algebra 'spo:2|3' --lambda 1 --truncate 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out).contains("config_hash"));
  CHECK(nlohmann::json::parse(a.out)["suite_version"] == "relations-1");

  CHECK(run("module --algebra 'spo:2|3' --lambda 1 --c 0").code == 3);
  CHECK(run("module --algebra 'spo:2|3' --lambda 1,2").code == 3);
}

TEST_CASE("blocks and table output") {
  auto r = run("blocks --algebra 'spo:2|3' --lambda '1;2;1'");
  REQUIRE(r.code == 0);
  auto j = result_of(r);
  CHECK(j["blocks"].size() == 2);
  CHECK(j["blocks"][0]["members"].size() == 2);
  auto t = run("grade --algebra 'spo:2|3' --format table");
  CHECK(t.code == 0);
  CHECK(t.out.find("result.r\t3") != std::string::npos);
  auto al = run("algebra --algebra 'spo:2|3'");
  CHECK(result_of(al)["ge0"] == "so(3)");
  auto w = run("wgen --algebra 'sl:2|1'");
  CHECK(result_of(w)["generators"].size() == 4);
}
