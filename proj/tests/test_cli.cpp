#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  std::string out;
  int exit_code = -1;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PARFUS_BIN_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int st = pclose(p);
  RunResult r;
  r.out = out;
  r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("parfus-cli-test-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("decompose table ends with the matrix-algebra footer") {
  auto r = run_cli("decompose --group cyclic:4 --format md");
  CHECK(r.exit_code == 0);
  CHECK(ends_with(r.out, "7·M1 ⊕ M2 ⊕ M3 over C\n"));

  auto k = run_cli("decompose --group product:2x2 --format md");
  CHECK(k.exit_code == 0);
  CHECK(ends_with(k.out, "11·M1 ⊕ M3 over C\n"));
}

TEST_CASE("fusion table of the order-3 cyclic group, frozen") {
  auto r = run_cli("fusion --group cyclic:3 --format md");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "| ⊠ | X1.a0 | X3.a0 | X7.a0 | X7.a1 | X7.a2 |\n"
        "|---|---|---|---|---|---|\n"
        "| X1.a0 | X1.a0 | 0 | 0 | 0 | 0 |\n"
        "| X3.a0 | 0 | X3.a0 | 0 | 0 | 0 |\n"
        "| X7.a0 | 0 | 0 | X7.a0 | X7.a1 | X7.a2 |\n"
        "| X7.a1 | 0 | 0 | X7.a1 | X7.a2 | X7.a0 |\n"
        "| X7.a2 | 0 | 0 | X7.a2 | X7.a0 | X7.a1 |\n");
}

TEST_CASE("repeated runs are byte-identical") {
  for (const std::string args :
       {"info --group cyclic:4", "decompose --group sym:3 --format csv",
        "simples --group product:2x2", "fusion --group cyclic:4 --format csv",
        "verify --group cyclic:3 --suite foundations",
        "matryoshka --group cyclic:8 --subgroup gens:2 --format md",
        "christmas --group sym:3 --subgroup gens:3"}) {
    auto a = run_cli(args);
    auto b = run_cli(args);
    INFO(args);
    CHECK(a.exit_code == 0);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("cache returns the cold-run bytes") {
  TempDir tmp;
  std::string args = "simples --group cyclic:6 --cache " + tmp.path.string();
  auto cold = run_cli(args);
  CHECK(cold.exit_code == 0);

  bool wrote = false;
  for (const auto& e : fs::directory_iterator(tmp.path)) {
    wrote = wrote || e.path().extension() == ".json";
  }
  CHECK(wrote);

  auto warm = run_cli(args);
  CHECK(warm.exit_code == 0);
  CHECK(warm.out == cold.out);

  // bypassing the cache must not change the bytes
  auto direct = run_cli("simples --group cyclic:6 --cache " + tmp.path.string() + " --no-cache");
  CHECK(direct.out == cold.out);
}

TEST_CASE("exit codes separate usage errors from results") {
  CHECK(run_cli("info --group nonsense").exit_code == 2);
  CHECK(run_cli("info --group cyclic:0").exit_code == 2);
  CHECK(run_cli("info --group product:32x4").exit_code == 2);  // over the default cap
  CHECK(run_cli("verify --group cyclic:2 --format csv").exit_code == 2);
  CHECK(run_cli("christmas --group cyclic:4").exit_code == 2);  // --subgroup missing
  CHECK(run_cli("matryoshka --group sym:3 --subgroup gens:1").exit_code == 2);  // non-abelian
  CHECK(run_cli("simples --group cyclic:4 --format xml").exit_code == 2);
  CHECK(run_cli("verify --group cyclic:4 --suite simples").exit_code == 0);
}

TEST_CASE("group files load through the file spec") {
  TempDir tmp;
  fs::path f = tmp.path / "c2.json";
  std::ofstream(f) << R"({"order": 2, "table": [[0,1],[1,0]], "label": "flip"})";
  auto r = run_cli("info --group file:" + f.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"label\": \"flip\"") != std::string::npos);
  CHECK(r.out.find("\"arrows\": 3") != std::string::npos);

  CHECK(run_cli("info --group file:" + (tmp.path / "missing.json").string()).exit_code == 2);
}

TEST_CASE("undefined projection functor is a result, not an error") {
  auto r = run_cli("matryoshka --group product:2x8 --subgroup gens:10");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"defined\": false") != std::string::npos);
}
