#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(HKCOUNT_BIN) + " " + args + " 2>/dev/null";
  std::FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("k3 table output") {
  const Run r = run("k3 --hmax 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("41513472") != std::string::npos);
  CHECK(r.out.rfind("h  bb_square", 0) == 0);
  const Run zero = run("k3 --hmax 0 --format csv");
  CHECK(zero.code == 0);
  CHECK(zero.out == "h,bb_square,value\n0,-2,0\n");
}

TEST_CASE("json output") {
  const Run r = run("k3 --hmax 3 --format json");
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "k3");
  CHECK(doc["params"]["hmax"] == "3");
  REQUIRE(doc["results"].size() == 4);
  CHECK(doc["results"][3]["index"]["h"] == "3");
  CHECK(doc["results"][3]["index"]["bb_square"] == "4");
  CHECK(doc["results"][3]["value"] == "9600");
  for (const auto& row : doc["results"]) CHECK(row["value"].is_string());
}

TEST_CASE("k3two") {
  const Run r = run("k3two --smax 3 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out == "s,bb_square,value\n0,0,648\n3,3/2,3780\n");
  const Run both = run("k3two --smax 12 --method both --format json");
  REQUIRE(both.code == 0);
  const auto doc = nlohmann::json::parse(both.out);
  CHECK(doc["params"]["method"] == "both");
  CHECK(doc["results"].back()["index"]["s"] == "12");
  CHECK(doc["results"].back()["index"]["bb_square"] == "6");
  CHECK(doc["results"].back()["value"] == "6629040");
}

TEST_CASE("fano") {
  CHECK(run("fano genus").out == "631\n");
  CHECK(run("fano degree").out == "3780\n");
  const Run e = run("fano degree --via-euler");
  CHECK(e.code == 0);
  CHECK(e.out == "3780\n");
}

TEST_CASE("series and jacobi") {
  CHECK(run("series delta --order 4 --format csv").out == "exponent,value\n0,0\n1,1\n2,-24\n3,252\n");
  const Run j = run("jacobi --qorder 2 --format json");
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["results"].size() == 6);
  CHECK(doc["results"][3]["value"] == "23760");
}

TEST_CASE("selftest") {
  const Run q = run("selftest");
  CHECK(q.code == 0);
  CHECK(q.out.find("PASS lines-on-cubic: 27") != std::string::npos);
  const Run f = run("selftest --level full");
  CHECK(f.code == 0);
  CHECK(f.out.find("PASS fano-genus: 1260") != std::string::npos);
  CHECK(f.out.find("PASS lines-on-quintic: 2875") != std::string::npos);
  CHECK(f.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("k3").code == 2);
  CHECK(run("k3 --hmax -1").code == 2);
  CHECK(run("k3 --hmax x").code == 2);
  CHECK(run("k3two --smax 4 --method fast").code == 2);
  CHECK(run("fano volume").code == 2);
  CHECK(run("series foo --order 3").code == 2);
  CHECK(run("series e2 --order 0").code == 2);
  CHECK(run("k3 --hmax 2 --format xml").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("output is deterministic") {
  for (const char* args : {"k3two --smax 20 --method both --format json", "jacobi --qorder 4",
                           "selftest --level full"}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("LR cache environment variable") {
  const auto path = (std::filesystem::temp_directory_path() / "hk_cli_lr_cache.txt").string();
  std::filesystem::remove(path);
  const std::string env = "HKCOUNT_LR_CACHE=" + path;
  const Run first = run("fano genus", env);
  CHECK(first.code == 0);
  CHECK(std::filesystem::exists(path));
  const Run second = run("fano genus", env);
  CHECK(second.out == first.out);
  std::filesystem::remove(path);
}
