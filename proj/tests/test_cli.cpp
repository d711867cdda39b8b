// End-to-end checks of the command-line surface: exit codes, file outputs,
// and report determinism.

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace std::string_literals;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args, const std::string& env = {}) {
  const std::string cmd = (env.empty() ? "" : env + " ") +
                          std::string(MANDELMAT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[512];
  while (fgets(buf, sizeof buf, pipe) != nullptr) r.output += buf;
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "mandelmat_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

long long line_count(const fs::path& p) {
  const std::string text = slurp(p);
  return std::count(text.begin(), text.end(), '\n');
}

}  // namespace

TEST_CASE("gen: matrix market with sidecar") {
  const fs::path out = work_dir() / "m3.mtx";
  const CliResult r = run_cli("gen --n 3 --format mm --out "s + out.string());
  CHECK(r.exit_code == 0);
  // Header + size line + 13 coordinate lines.
  CHECK(line_count(out) == 15);
  const std::string sidecar = slurp(fs::path(out).replace_extension(".json"));
  CHECK(sidecar.find("\"nnz\": 13") != std::string::npos);
}

TEST_CASE("gen: dot digraph") {
  const fs::path out = work_dir() / "g1.dot";
  const CliResult r = run_cli("gen --n 1 --format dot --out "s + out.string());
  CHECK(r.exit_code == 0);
  CHECK(slurp(out).find("1 -> 1") != std::string::npos);
}

TEST_CASE("order one works across subcommands") {
  CHECK(run_cli("eigvec --n 1").exit_code == 0);
  CHECK(run_cli("svd --n 1").exit_code == 0);
  CHECK(run_cli("perron --n 1").exit_code == 0);
}

TEST_CASE("perron exit code and fields") {
  const CliResult r = run_cli("perron --n 7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("rho        1.99977404869373") != std::string::npos);
  CHECK(r.output.find("iterations") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("perron").exit_code == 2);            // missing --n
  CHECK(run_cli("nonsense").exit_code == 2);          // unknown subcommand
  CHECK(run_cli("gen --n 0 --format mm").exit_code == 2);
  CHECK(run_cli("spectrum --n 9").exit_code == 2);    // above ceiling
  // Parent of the output path exists but is not a directory.
  CHECK(run_cli("homotopy --n 2 --steps 8 --out /etc/passwd/q.csv").exit_code == 1);
}

TEST_CASE("relative outputs resolve against MANDELMAT_OUT_DIR") {
  const fs::path dir = work_dir() / "envout";
  fs::remove_all(dir);
  const CliResult r = run_cli("gen --n 2 --format mm --out sub/m2.mtx",
                              "MANDELMAT_OUT_DIR=" + dir.string());
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir / "sub" / "m2.mtx"));
}

TEST_CASE("verify exits 0 and is byte-identical across runs") {
  const CliResult a = run_cli("verify --max-n 4");
  const CliResult b = run_cli("verify --max-n 4");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("checks passed") != std::string::npos);
}

TEST_CASE("export: eigvec row count matches the dimension") {
  const fs::path out = work_dir() / "eigvec14.csv";
  const CliResult r = run_cli("export --kind eigvec --n 14 --out "s + out.string());
  CHECK(r.exit_code == 0);
  CHECK(line_count(out) == 16384);  // header + 16383 rows
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "index,component,log2_component");
}

TEST_CASE("export: multi-n singular values") {
  const fs::path out = work_dir() / "svals.csv";
  const CliResult r =
      run_cli("export --kind svals_all --n 9 --min-n 7 --out "s + out.string());
  CHECK(r.exit_code == 0);
  CHECK(line_count(out) == 1 + 127 + 255 + 511);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,index,log2_index,sigma,s_eig");
}

TEST_CASE("export: chained homotopy data carries the bound column") {
  const fs::path out = work_dir() / "chain.csv";
  const CliResult r = run_cli(
      "export --kind homotopy --n 3 --steps 8 --out "s + out.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "path_id,t,abs_lambda,lambda_squared,bound_sq");
  // Stages 1 and 2: (3 + 7) paths, 9 samples each.
  CHECK(line_count(out) == 1 + 10 * 9);
}
