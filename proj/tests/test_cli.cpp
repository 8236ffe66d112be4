#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// run the built binary, capturing stdout+stderr
RunResult run(const std::string& args) {
  std::string cmd = std::string(CD1LAB_TOOL_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int rc = pclose(p);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(CD1LAB_FIXTURE_DIR) + "/" + name;
}

std::string tmp_path(const std::string& name) {
  const char* d = std::getenv("TMPDIR");
  return std::string(d ? d : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("analyze reports a certificate for the smallest example") {
  auto r = run("analyze " + fixture("s3.grp"));
  CHECK(r.status == 0);
  CHECK(r.out.find("order 6, 3 classes") != std::string::npos);
  CHECK(r.out.find("CD1: yes; a_k=2 b_k=-1 p=3 n=1 t=0 |N|=3") !=
        std::string::npos);
  CHECK(r.out.find("extreme (frobenius)") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("analyze reports absence cleanly") {
  auto r = run("analyze " + fixture("c4.grp"));
  CHECK(r.status == 0);
  CHECK(r.out.find("CD1: no") != std::string::npos);
}

TEST_CASE("analyze json output is machine readable") {
  auto r = run("analyze --json " + fixture("s3.grp"));
  CHECK(r.status == 0);
  CHECK(r.out.find("\"a_k\": 2") != std::string::npos);
  CHECK(r.out.find("\"checks\"") != std::string::npos);

  auto rt = run("analyze --table " + fixture("s3.grp"));
  CHECK(rt.status == 0);
  CHECK(rt.out.find("-1") != std::string::npos);  // table values printed
}

TEST_CASE("analyze of the order-54 fixtures") {
  for (const char* f : {"o54_exp3.grp", "o54_exp9.grp"}) {
    auto r = run("analyze " + fixture(f));
    CHECK(r.status == 0);
    CHECK(r.out.find("order 54") != std::string::npos);
    CHECK(r.out.find("CD1: yes; a_k=6 b_k=-3 p=3 n=1 t=1 |N|=3") !=
          std::string::npos);
    CHECK(r.out.find("non-extreme") != std::string::npos);
  }
}

TEST_CASE("missing and corrupted inputs exit with code 1") {
  CHECK(run("analyze " + tmp_path("cd1lab_no_such.grp")).status == 1);

  std::string bad = tmp_path("cd1lab_bad.grp");
  {
    std::ofstream f(bad);
    f << "degree 5\n(0 1 2\n";  // unterminated cycle
  }
  auto r = run("analyze " + bad);
  CHECK(r.status == 1);
  CHECK(r.out.find("error:") != std::string::npos);
  std::remove(bad.c_str());

  auto r2 = run("analyze");
  CHECK(r2.status != 0);  // missing argument

  auto r3 = run("construct affine --q 6");
  CHECK(r3.status == 1);  // not a prime power
}

TEST_CASE("construct builds, reports and saves groups") {
  auto r = run("construct affine --q 8");
  CHECK(r.status == 0);
  CHECK(r.out.find("CD1: yes; a_k=7 b_k=-1") != std::string::npos);

  std::string out = tmp_path("cd1lab_es32.grp");
  auto r2 = run("construct extraspecial --m 2 --kind + --out " + out);
  CHECK(r2.status == 0);
  CHECK(r2.out.find("CD1: yes; a_k=4 b_k=-4") != std::string::npos);
  auto r3 = run("analyze " + out);
  CHECK(r3.status == 0);
  CHECK(r3.out.find("order 32") != std::string::npos);
  std::remove(out.c_str());

  auto r4 = run("construct order54 --kind exp9");
  CHECK(r4.status == 0);
  CHECK(r4.out.find("a_k=6 b_k=-3") != std::string::npos);

  auto r5 = run("construct semidirect --p 3 --n 2 --matrices " +
                fixture("q8_gl2_3.mat"));
  CHECK(r5.status == 0);
  CHECK(r5.out.find("order 72") != std::string::npos);
  CHECK(r5.out.find("a_k=8 b_k=-1") != std::string::npos);
}

TEST_CASE("junk subcommands are rejected") {
  CHECK(run("frobnicate").status != 0);
  CHECK(run("construct nosuchfamily").status == 1);
}
