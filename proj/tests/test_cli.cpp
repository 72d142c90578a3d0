#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "ramanujan/array_code.hpp"
#include "ramanujan/io.hpp"

namespace fs = std::filesystem;
using namespace ramanujan;

namespace {

struct Outcome {
  int code = -1;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

class Workdir {
 public:
  explicit Workdir(const std::string& name) : dir_(fs::temp_directory_path() / ("ramanujan_cli_" + name)) {
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  ~Workdir() { fs::remove_all(dir_); }
  fs::path operator/(const std::string& f) const { return dir_ / f; }

  Outcome run(const std::string& args) const {
    const fs::path out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
    const std::string cmd = std::string("\"") + RAMANUJAN_CLI + "\" " + args + " > \"" + out.string() +
                            "\" 2> \"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    Outcome o;
    o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    o.out = slurp(out);
    o.err = slurp(err);
    return o;
  }

 private:
  fs::path dir_;
};

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("construct writes a sorted pattern file and a manifest") {
  Workdir w("construct");
  const Outcome o = w.run("construct array-code --q 5 --l 3 --out " + q(w / "b.mtx"));
  REQUIRE(o.code == 0);
  const BinaryBigraph b = io::read_matrix_market(w / "b.mtx");
  CHECK(b.rows() == 25);
  CHECK(b.cols() == 15);
  CHECK(b.edge_count() == 75);
  CHECK(b == array_code::build_array_code({5, 3}));

  const auto manifest = nlohmann::json::parse(slurp(w / "b.manifest.json"));
  CHECK(manifest["construction"] == "array-code");
  CHECK(manifest["parameters"]["q"] == 5);
  CHECK(manifest.contains("duration_seconds"));
}

TEST_CASE("construct rejects parameters outside a family's domain") {
  Workdir w("reject");
  const Outcome o = w.run("construct bibak --q 5 --out " + q(w / "g.mtx"));
  CHECK(o.code != 0);
  CHECK(o.err.find("error:") != std::string::npos);
  CHECK_FALSE(fs::exists(w / "g.mtx"));
}

TEST_CASE("verify reports on a bigraph") {
  Workdir w("verify");
  REQUIRE(w.run("construct array-code --q 2 --l 2 --out " + q(w / "b.mtx")).code == 0);
  const Outcome o = w.run("verify --in " + q(w / "b.mtx") + " --mode bigraph --report " + q(w / "r.json"));
  REQUIRE(o.code == 0);
  const auto r = nlohmann::ordered_json::parse(slurp(w / "r.json"));
  CHECK(r.begin().key() == "kind");
  CHECK(r["sigma1"].get<double>() == doctest::Approx(2.0));
  CHECK(r["sigma2"].get<double>() == doctest::Approx(std::sqrt(2.0)));
  CHECK(r["is_ramanujan"] == true);
}

TEST_CASE("verify refuses an irregular file") {
  Workdir w("irregular");
  std::ofstream(w / "x.mtx") << "%%MatrixMarket matrix coordinate pattern general\n3 3 4\n1 1\n1 2\n2 2\n3 3\n";
  const Outcome o = w.run("verify --in " + q(w / "x.mtx") + " --mode bigraph");
  CHECK(o.code == 1);
  CHECK(o.err.find("error:") != std::string::npos);
}

TEST_CASE("perturb with nothing prohibited leaves the matrix alone") {
  Workdir w("empty");
  REQUIRE(w.run("construct array-code --q 7 --l 3 --out " + q(w / "b.mtx")).code == 0);
  std::ofstream(w / "m.txt") << "# nothing here\n";
  const Outcome o = w.run("perturb --in " + q(w / "b.mtx") + " --prohibited " + q(w / "m.txt") + " --out " +
                          q(w / "ep.mtx"));
  REQUIRE(o.code == 0);
  CHECK(slurp(w / "ep.mtx") == slurp(w / "b.mtx"));
  CHECK(slurp(w / "ep_switches.csv") == "i,j,i_bar,j_bar\n");
}

TEST_CASE("perturb removes a single prohibited edge with one switch") {
  Workdir w("single");
  REQUIRE(w.run("construct array-code --q 7 --l 3 --out " + q(w / "b.mtx")).code == 0);
  std::ofstream(w / "m.txt") << "# one entry\n1,1\n";
  const Outcome o = w.run("perturb --in " + q(w / "b.mtx") + " --prohibited " + q(w / "m.txt") + " --out " +
                          q(w / "ep.mtx"));
  REQUIRE(o.code == 0);
  const BinaryBigraph ep = io::read_matrix_market(w / "ep.mtx");
  CHECK_FALSE(ep(0, 0));
  std::istringstream log(slurp(w / "ep_switches.csv"));
  std::string line;
  int rows = 0;
  while (std::getline(log, line)) ++rows;
  CHECK(rows == 2);
  const auto cert = nlohmann::json::parse(slurp(w / "ep_certificate.json"));
  CHECK(cert["p"] == 1);
  CHECK(cert.contains("feasibility"));
}

TEST_CASE("a malformed prohibited line is reported with its number") {
  Workdir w("malformed");
  REQUIRE(w.run("construct array-code --q 7 --l 3 --out " + q(w / "b.mtx")).code == 0);
  std::ofstream(w / "m.txt") << "# header\n1,1\n2;3\n";
  const Outcome o = w.run("perturb --in " + q(w / "b.mtx") + " --prohibited " + q(w / "m.txt") + " --out " +
                          q(w / "ep.mtx"));
  CHECK(o.code == 1);
  CHECK(o.err.find("line 3") != std::string::npos);
}

TEST_CASE("converted LPS graph verifies as a Ramanujan graph") {
  Workdir w("convert");
  REQUIRE(w.run("convert nonbipartite --family lps --p 5 --q 13 --out " + q(w / "g.mtx")).code == 0);
  const BinaryBigraph a = io::read_matrix_market(w / "g.mtx");
  CHECK(a.rows() == 1092);
  const Outcome o = w.run("verify --in " + q(w / "g.mtx") + " --mode graph");
  REQUIRE(o.code == 0);
  const auto r = nlohmann::json::parse(o.out);
  CHECK(r["degree"] == 6);
  CHECK(r["is_ramanujan"] == true);

  const Outcome refused = w.run("convert nonbipartite --family gunnells --q 3 --l 3 --out " + q(w / "h.mtx"));
  CHECK(refused.code == 1);
  CHECK(refused.err.find("self-orthogonal") != std::string::npos);
}
