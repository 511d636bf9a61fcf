#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(K3C_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  RunResult r;
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  int rc = pclose(p);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("surface query json") {
  auto r = run("query surface --n 2 --d 9 --g 5");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "\"exists\":true"));
  CHECK(contains(r.out, "\"case\":\"mainthm.iv\""));
  CHECK(contains(r.out, "\"picard\":\"rank2\""));

  auto f = run("query surface --n 2 --d 5 --g 3");
  CHECK(f.status == 0);  // successful evaluation, negative verdict
  CHECK(contains(f.out, "\"exists\":false"));
}

TEST_CASE("surface query with BN verdict and witness") {
  auto r = run("query surface --n 6 --d 6 --g 2 --bn");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "\"bn_general\":false"));
  CHECK(contains(r.out, "\"witness\":\"(H-C, C)\""));
}

TEST_CASE("rank-1 certificate in json") {
  auto r = run("query surface --n 4 --d 8 --g 5");
  CHECK(contains(r.out, "\"certificate\":\"k=1,m=4\""));
  CHECK(contains(r.out, "\"picard\":\"rank1\""));
}

TEST_CASE("family query") {
  auto r = run("query family --family k --d 19 --g 9");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "\"admissible\":true"));
}

TEST_CASE("oracle query") {
  auto r = run("oracle --n 6 --d 5 --g 1 --op h0 --a 1 --b -1");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "\"h0\":3"));
  auto m = run("oracle --n 2 --d 3 --g 1 --op minus-two --bound 5");
  CHECK(contains(m.out, "\"classes\":[\"H-C\"]"));
}

TEST_CASE("family enumeration table") {
  auto r = run("enumerate --family e --d-max 10 --g-max 6");
  CHECK(r.status == 0);
  auto ls = lines(r.out);
  REQUIRE(!ls.empty());
  CHECK(ls[0] == "family,d,g,admissible,case_label");
  CHECK(ls.size() == 1 + 10 * 7);  // header + d in [1,10], g in [0,6]
  bool found = false;
  for (const auto& l : ls) found = found || l == "e,4,1,true,quadratic-clause";
  CHECK(found);

  auto h = run("enumerate --family h --d-max 5 --g-max 1");
  CHECK(contains(h.out, "h,5,1,true,quadratic-clause"));

  auto empty = run("enumerate --family a --d-max 0 --g-max 5");
  CHECK(lines(empty.out).size() == 1);  // header only
}

TEST_CASE("surface enumeration round-trips against point queries") {
  auto r = run("enumerate --surface --n 2 --d-max 6 --g-max 4");
  auto ls = lines(r.out);
  REQUIRE(!ls.empty());
  CHECK(ls[0] == "n,d,g,exists,bn_general,case_label");
  CHECK(ls.size() == 1 + 6 * 5);
  for (size_t i = 1; i < ls.size(); i += 7) {
    std::string row = ls[i];
    auto field = [&](int idx) {
      std::istringstream is(row);
      std::string tok;
      for (int j = 0; j <= idx; ++j) std::getline(is, tok, ',');
      return tok;
    };
    auto q = run("query surface --n " + field(0) + " --d " + field(1) + " --g " + field(2));
    CHECK(contains(q.out, "\"exists\":" + field(3)));
    CHECK(contains(q.out, "\"case\":\"" + field(5) + "\""));
  }
}

TEST_CASE("enumeration output is deterministic") {
  auto a = run("enumerate --family c --d-max 15 --g-max 15");
  auto b = run("enumerate --family c --d-max 15 --g-max 15");
  CHECK(a.out == b.out);
}

TEST_CASE("registry tables") {
  auto m = run("tables models");
  CHECK(contains(m.out, "9 | (1^4) ∩ Σ^6_16 ⊆ P^9"));
  CHECK(lines(m.out).size() == 9);

  auto n = run("tables nodes");
  CHECK(contains(n.out, "(2,1^4) ∩ G(V^6,2) ⊆ P^10 | (1^6) ∩ G(V^6,2) ⊆ P^8 | 14"));
  CHECK(lines(n.out).size() == 16);

  auto f = run("tables families");
  CHECK(lines(f.out).size() == 11);
}

TEST_CASE("verification suites run from the command line") {
  auto r = run("verify bn-residual");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "12 checked"));
  CHECK(contains(r.out, "PASS"));
}

TEST_CASE("exit codes") {
  CHECK(run("query surface --n 1 --d 1 --g 0").status == 2);   // n out of range
  CHECK(run("query surface --nonsense 3").status == 2);        // unknown flag
  CHECK(run("verify no-such-suite").status == 2);
  CHECK(run("tables nothing").status == 2);
  CHECK(run("enumerate --d-max 3 --g-max 3").status == 2);     // no target
  CHECK(run("query family --family q --d 1 --g 1").status == 2);
}
