#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mandelmat/io.hpp"
#include "mandelmat/matgen.hpp"

using namespace mandelmat;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "mandelmat_io_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("matrix market: header, count, round trip") {
  const fs::path path = temp_dir() / "m2.mtx";
  const SparseIntMatrix m2 = mandelbrot_matrix(2);
  export_matrix_market(m2, path);

  const std::string text = slurp(path);
  CHECK(text.rfind("%%MatrixMarket matrix coordinate integer general\n", 0) == 0);
  // Header plus size line plus five coordinate lines.
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);

  CHECK(read_matrix_market(path) == m2);

  for (int n : {1, 4, 6}) {
    const fs::path p = temp_dir() / ("roundtrip" + std::to_string(n) + ".mtx");
    for (const SparseIntMatrix& m :
         {mandelbrot_matrix(n), s_matrix(n), mandelbrot_inverse(n)}) {
      export_matrix_market(m, p);
      CHECK(read_matrix_market(p) == m);
    }
  }
  CHECK(!fs::exists(fs::path(path.string() + ".tmp")));
}

TEST_CASE("matrix market: malformed inputs are rejected") {
  const fs::path bad_header = temp_dir() / "bad_header.mtx";
  atomic_write_text(bad_header,
                    "%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 1.5\n");
  CHECK_THROWS_AS(read_matrix_market(bad_header), std::runtime_error);

  const fs::path truncated = temp_dir() / "truncated.mtx";
  atomic_write_text(truncated,
                    "%%MatrixMarket matrix coordinate integer general\n3 3 5\n1 1 1\n");
  CHECK_THROWS_AS(read_matrix_market(truncated), std::runtime_error);

  CHECK_THROWS_AS(read_matrix_market(temp_dir() / "missing.mtx"),
                  std::runtime_error);
}

TEST_CASE("dot export") {
  const fs::path path = temp_dir() / "g1.dot";
  export_dot(digraph(1), path);
  const std::string text = slurp(path);
  CHECK(text.find("1 -> 1") != std::string::npos);
  CHECK(text.rfind("digraph", 0) == 0);

  export_dot(digraph(3), path);
  const std::string t3 = slurp(path);
  CHECK(std::count(t3.begin(), t3.end(), '>') == 13);
}

TEST_CASE("json sidecar fields") {
  const fs::path path = temp_dir() / "m3.json";
  write_json_sidecar(path, 3, 7, 13, "m");
  const std::string text = slurp(path);
  CHECK(text.find("\"n\": 3") != std::string::npos);
  CHECK(text.find("\"dim\": 7") != std::string::npos);
  CHECK(text.find("\"nnz\": 13") != std::string::npos);
  CHECK(text.find("\"kind\": \"m\"") != std::string::npos);
}

TEST_CASE("csv writer puts a header first") {
  const fs::path path = temp_dir() / "t.csv";
  write_csv(path, {"a", "b"}, {{"1", "2"}, {"3", "4"}});
  CHECK(slurp(path) == "a,b\n1,2\n3,4\n");
}

TEST_CASE("format_double round-trips") {
  for (double v : {1.0, 0.1, 1.9997740486937272, 3.5e-300, -2.25}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
}
