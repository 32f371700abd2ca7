#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is dropped unless merge is set.
Result run(const std::string& args, bool merge = false) {
  std::string cmd = std::string("'") + EMPTY4_CLI + "' " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

struct TempDir {
  fs::path path = fs::temp_directory_path() / ("empty4-cli-" + std::to_string(::getpid()));
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& body) const {
    std::ofstream(path / name) << body;
    return (path / name).string();
  }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run("--help").status == 0);
  CHECK(run("").status == 2);
  CHECK(run("no-such-command").status == 2);
  CHECK(run("enumerate").status == 2);  // --to missing
  CHECK(run("enumerate --to 5 --checkpoint x").status == 2);  // needs --out
  CHECK(run("classify").status == 2);   // no tuple, no --coords
  CHECK(run("classify 39:5,8,13,14,38 --coords /etc/hostname").status == 2);
}

TEST_CASE("classify") {
  Result r = run("classify 39:5,8,13,14,38");
  CHECK(r.status == 0);
  CHECK(r.out.find("sporadic") != std::string::npos);
  r = run("classify 100:9,1,-2,-3,-5");
  CHECK(r.status == 0);
  CHECK(r.out.find("family k3 P01") != std::string::npos);
  r = run("classify 5:1,1,1,1,1");
  CHECK(r.status == 0);
  CHECK(r.out.find("not-hollow") != std::string::npos);
  r = run("classify 5:1,1,1,1,2", true);
  CHECK(r.status == 1);
  CHECK(r.out.rfind("error: ", 0) == 0);
  CHECK(run("classify 5:1,x,1,1,2").status == 1);
}

TEST_CASE("predicates") {
  CHECK(run("empty-check 100:9,1,-2,-3,-5").out == "empty\n");
  CHECK(run("empty-check 99:9,1,-2,-3,-5").out == "not-empty\n");
  CHECK(run("hollow-check 99:9,1,-2,-3,-5").out == "hollow\n");
  CHECK(run("hollow-check 5:1,1,1,1,1").out == "not-hollow\n");
}

TEST_CASE("hstar and width") {
  Result r = run("hstar 42:4,7,15,17,41");
  CHECK(r.status == 0);
  CHECK(r.out == "1 0 25 16 0\n");
  CHECK(run("hstar 99:9,1,-2,-3,-5").status == 1);
  CHECK(run("width 7:2,-1,-1,-1,1").out == "1\n");
}

TEST_CASE("realize and tuple-of round trip") {
  TempDir dir;
  Result r = run("realize 100:9,1,-2,-3,-5");
  REQUIRE(r.status == 0);
  std::string coords = dir.file("s.txt", r.out);
  Result t = run("tuple-of --coords " + coords);
  CHECK(t.status == 0);
  Result c = run("classify --coords " + coords);
  CHECK(c.out.find("family k3 P01") != std::string::npos);
  Result w1 = run("width --coords " + coords);
  Result w2 = run("width 100:9,1,-2,-3,-5");
  CHECK(w1.out == w2.out);
  std::string klein = dir.file("k.txt", "0,0,0\n2,0,0\n0,2,0\n0,0,1\n");
  CHECK(run("tuple-of --coords " + klein).status == 1);
  std::string broken = dir.file("b.txt", "0,0\n1\n");
  CHECK(run("tuple-of --coords " + broken).status == 1);
}

TEST_CASE("families list") {
  Result r = run("families list");
  CHECK(r.status == 0);
  CHECK(r.out.find("P01") != std::string::npos);
  CHECK(r.out.find("N6-1") != std::string::npos);
}

TEST_CASE("enumerate and the report commands") {
  TempDir dir;
  Result r = run("enumerate --to 40 --sporadic");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("# generator: ", 0) == 0);
  CHECK(r.out.find("\n24 ") != std::string::npos);

  const std::string out = dir / "c.txt";
  REQUIRE(run("enumerate --to 40 --sporadic --workers 2 --out " + out).status == 0);
  std::ifstream in(out);
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(body == r.out);

  Result s = run("stats --machine " + out);
  CHECK(s.status == 0);
  CHECK(s.out.rfind("24 1\n", 0) == 0);
  CHECK(run("stats " + out).out.rfind("     V  count\n", 0) == 0);
  CHECK(run("widths --machine " + out).status == 0);
  CHECK(run("excess " + out).out.rfind("  V-1  S-5  tuple\n", 0) == 0);

  const std::string all = dir / "all.txt";
  REQUIRE(run("enumerate --to 40 --out " + all).status == 0);
  Result d = run("diff --machine " + out + " " + all);
  CHECK(d.status == 0);
  CHECK(d.out.rfind("> ", 0) == 0);
  CHECK(d.out.find("< ") == std::string::npos);

  const std::string cp = dir / "state.json";
  const std::string resumed = dir / "r.txt";
  REQUIRE(run("enumerate --to 40 --sporadic --out " + resumed + " --checkpoint " + cp).status == 0);
  CHECK(fs::exists(cp));
  CHECK(run("enumerate --to 41 --sporadic --out " + resumed + " --checkpoint " + cp).status == 1);

  std::string messy = dir.file("m.txt", "39 5 8 13 14 38\n");
  CHECK(run("stats " + messy).status == 1);
  CHECK(run("stats --normalize --machine " + messy).out == "39 1\n");
  std::string short_row = dir.file("p.txt", "39 5 8 13\n");
  Result e = run("stats " + short_row, true);
  CHECK(e.status == 1);
  CHECK(e.out.find("line 1") != std::string::npos);
}

TEST_CASE("singularities") {
  Result r = run("singularities 29");
  CHECK(r.status == 0);
  CHECK(r.out == "15\n");
}
