// End-to-end smoke tests of the fuchscli binary: exit codes, group file
// round-trips, and certificate emission/verification.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

#ifndef FUCHSCLI_PATH
#error "FUCHSCLI_PATH must point at the built CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "fuchscli-smoke";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct RunResult {
  int code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  fs::path log = scratch_dir() / "last-output.txt";
  std::string cmd = std::string(FUCHSCLI_PATH) + " " + args + " > " +
                    log.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::ostringstream text;
  text << in.rdbuf();
  return {code, text.str()};
}

}  // namespace

TEST_CASE("group subcommand reports fingerprints and parse errors") {
  auto ok = run_cli("group cyclic:6");
  CHECK(ok.code == 0);
  CHECK(ok.output.find("order=6") != std::string::npos);

  CHECK(run_cli("group 'quaternion:8' --info").code == 0);
  CHECK(run_cli("group cyclic:x").code == 2);
  CHECK(run_cli("group 'unknowntype:3'").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("").code == 2);
}

TEST_CASE("group files round-trip through file: recipes") {
  fs::path cay = scratch_dir() / "q8.cay";
  CHECK(run_cli("group quaternion:8 --out " + cay.string()).code == 0);
  auto direct = run_cli("group quaternion:8");
  auto from_file = run_cli("group file:" + cay.string());
  CHECK(from_file.code == 0);
  CHECK(from_file.output == direct.output);
  CHECK(run_cli("group file:/no/such/file.cay").code == 2);
}

TEST_CASE("check exit codes follow the verdict") {
  CHECK(run_cli("check 'product(cyclic:2,cyclic:2)' --ideal elementary").code == 0);
  CHECK(run_cli("check sdp:Y_C3 --ideal sdp_c3 --full").code == 0);
  // Collapsed embedding: not fully realized.
  auto bad = run_cli("check cyclic:4 --gen '{0,1}'");
  CHECK(bad.code == 1);
  CHECK(bad.output.find("NOT_EMBEDDED") != std::string::npos);
  // Exactly one ideal source is required.
  CHECK(run_cli("check cyclic:4").code == 2);
  CHECK(run_cli("check cyclic:4 --ideal elementary --gen '{0,1}'").code == 2);
  // The dimension cap surfaces as a resource error.
  CHECK(run_cli("check sdp:YQ_C6 --ideal c6 --cap-dim 2").code == 3);
}

TEST_CASE("refute exit codes distinguish proof from inconclusive") {
  CHECK(run_cli("refute quaternion:8 --depth 1 --seed-unit '{0,1,4}'").code == 0);
  CHECK(run_cli("refute dihedral:8 --depth 2").code == 0);
  CHECK(run_cli("refute cyclic:4 --depth 2").code == 1);
  CHECK(run_cli("refute 'product(cyclic:2,cyclic:2)' --depth 2").code == 1);
  // Shuffled seed order must not change the outcome.
  CHECK(run_cli("refute dihedral:8 --depth 2 --seed 12345").code == 0);
}

TEST_CASE("repro runs the built-in catalog") {
  auto all = run_cli("repro --all --jobs 2");
  CHECK(all.code == 0);
  CHECK(all.output.find("FAIL") == std::string::npos);
  CHECK(all.output.find("V4") != std::string::npos);
  CHECK(run_cli("repro V4").code == 0);
  CHECK(run_cli("repro NO_SUCH_CASE").code == 2);
}

TEST_CASE("emitted certificates verify, tampered ones do not") {
  fs::path cert = scratch_dir() / "a4.json";
  CHECK(run_cli("--json --out " + cert.string() +
                " check sdp:Y_C3 --ideal sdp_c3")
            .code == 0);
  CHECK(run_cli("verify " + cert.string()).code == 0);
  // Explicit group recipe overrides the embedded one.
  CHECK(run_cli("verify " + cert.string() + " --group sdp:Y_C3").code == 0);
  // Verifying against the wrong group fails.
  CHECK(run_cli("verify " + cert.string() + " --group cyclic:12").code != 0);

  nlohmann::json doc;
  {
    std::ifstream in(cert);
    in >> doc;
  }
  CHECK(doc["schema"] == 1);
  doc["unit_count"] = 11;
  fs::path tampered = scratch_dir() / "a4-tampered.json";
  {
    std::ofstream out(tampered);
    out << doc.dump(2);
  }
  CHECK(run_cli("verify " + tampered.string()).code == 1);
  CHECK(run_cli("verify /no/such/cert.json").code == 2);
}

TEST_CASE("non-full certificates still verify as records") {
  fs::path cert = scratch_dir() / "q8-u.json";
  // Q8 with u = xy: realizes but is not End-invariant; exit code 1 but a
  // valid certificate document is still written.
  CHECK(run_cli("--json --out " + cert.string() +
                " check quaternion:8 --gen '{0,1,4,5}'")
            .code == 1);
  CHECK(run_cli("verify " + cert.string()).code == 0);
}
