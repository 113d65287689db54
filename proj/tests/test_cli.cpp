#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run bpe(const std::string& args) {
  std::string cmd = std::string(BPE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = std::string(BPE_TEST_TMP) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("decide exit codes") {
  Run theta = bpe("decide THETA3 ab:2 --witness");
  CHECK(theta.code == 1);
  CHECK(theta.out.find("path=a\n") != std::string::npos);
  CHECK(bpe("decide C3 ab:2").code == 0);
  CHECK(bpe("decide C2 trivial").code == 1);
  CHECK(bpe("decide THETA3 ab").code == 2);
  CHECK(bpe("decide NOSUCH ab:2").code == 2);
  CHECK(bpe("decide C3 ab:1").code == 2);
  CHECK(bpe("decide").code == 2);
}

TEST_CASE("decide trace and json") {
  Run t = bpe("decide DIGONS2 ab:2 --trace");
  CHECK(t.out.find("n=1 arrow=u->v[a:1] P={u;}") != std::string::npos);
  CHECK(t.out.substr(t.out.rfind("VERDICT")) == "VERDICT breaking witness=a level=1\n");
  Run j = bpe("--json decide THETA3 ab:3");
  CHECK(j.out.find("\"verdict\": \"breaking\"") != std::string::npos);
}

TEST_CASE("decide reads graph files") {
  std::string path = temp_file("loop.json", R"({"vertices":["x"],"edges":[{"id":"l","src":"x","dst":"x"}]})");
  CHECK(bpe("decide " + path + " ab:2").code == 0);
  CHECK(bpe("decide " + path + " trivial").code == 0);
  std::string bad = temp_file("bad.json", "{\"vertices\": [");
  CHECK(bpe("decide " + bad + " ab:2").code == 2);
}

TEST_CASE("certificates") {
  CHECK(bpe("cert builtin THETA3").code == 0);
  CHECK(bpe("cert builtin DIGONS2").code == 0);
  CHECK(bpe("cert builtin C3").code == 2);
  Run dump = bpe("cert builtin THETA3 --dump");
  std::string good = temp_file("theta.cert.json", dump.out);
  CHECK(bpe("cert check " + good).code == 0);
  std::string broken = dump.out;
  broken.replace(broken.find("\"claimed_level\""), 15, "\"claimed_levels\"");
  CHECK(bpe("cert check " + temp_file("broken.cert.json", broken)).code == 2);
  CHECK(bpe("cert check /nonexistent.json").code == 2);
}

TEST_CASE("minors and export") {
  CHECK(bpe("minors --contains THETA3 THETA3").code == 0);
  CHECK(bpe("minors --contains DIGONS2 C5").code == 1);
  CHECK(bpe("minors --forbidden THETA3").code == 1);
  CHECK(bpe("minors --forbidden DECC4").code == 0);
  Run cat = bpe("minors --catalog");
  CHECK(cat.code == 0);
  CHECK(cat.out.find("\"DIGONS2\"") != std::string::npos);
  Run dot = bpe("export --dot C3 --highlight '0;'");
  CHECK(dot.code == 0);
  CHECK(dot.out.find("\"0\" [color=red") != std::string::npos);
}

TEST_CASE("survey") {
  Run s = bpe("survey --max-vertices 3 --max-edges 4 --variety ab:2 --variety trivial");
  CHECK(s.code == 0);
  CHECK(s.out.find("disagreements: 0") != std::string::npos);
  CHECK(bpe("survey --max-vertices 5").code == 2);
  CHECK(bpe("--json survey --max-vertices 2 --max-edges 2").out == bpe("--json survey --max-vertices 2 --max-edges 2").out);
}
