#include "qgc/codon.hpp"
#include "qgc/symmetry.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int exit_code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(QGC_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmp_path(const std::string& name) { return std::string(QGC_TEST_TMPDIR) + "/" + name; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("count") {
  auto r = run("count --k 4 --r 3 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["arrangements"] == "64");
  CHECK(j["multiset_count"] == "20");

  j = nlohmann::json::parse(run("count --k 1 --r 1 --format json").out);
  CHECK(j["arrangements"] == "1");
  CHECK(j["multiset_count"] == "1");

  j = nlohmann::json::parse(run("count --k 5 --r 4 --format json").out);
  CHECK(j["arrangements"] == "625");
  CHECK(j["multiset_count"] == "70");

  CHECK(run("count --k 0 --r 3").exit_code == 2);
  CHECK(run("count --k -1 --r 3").exit_code == 2);
  CHECK(run("count --k 30 --r 30").exit_code == 3);
  CHECK(run("count --k 4 --r 3 --cap 10").exit_code == 3);
  CHECK(run("count --k 30 --r 30 --no-enumerate").exit_code == 0);
}

TEST_CASE("analyze") {
  auto r = run("analyze --builtin standard --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["symmetry"]["class_count"] == 20);
  CHECK(j["symmetry"]["coherent_count"] == 4);
  CHECK(j["violation"]["incoherent_pairs"] == 95);

  SUBCASE("identical runs are byte-identical") {
    for (const char* fmt : {"text", "json", "csv"}) {
      const std::string args = std::string("analyze --builtin standard --format ") + fmt;
      CHECK(run(args).out == run(args).out);
    }
  }

  SUBCASE("multiset-invariant synthetic table") {
    const auto path = tmp_path("invariant.gc");
    REQUIRE(run("synth --seed 11 --kind invariant -o " + path).exit_code == 0);
    const auto s = run("analyze --table " + path + " --format json");
    REQUIRE(s.exit_code == 0);
    const auto sj = nlohmann::json::parse(s.out);
    CHECK(sj["violation"]["incoherent_pairs"] == 0);
    CHECK(sj["symmetry"]["coherent_count"] == 20);
    const auto code = qgc::synthetic_code(11, qgc::SyntheticKind::MultisetInvariant);
    CHECK(sj["symmetry"]["bijective_20_to_20"] == qgc::partition_classes(code).bijective_20_to_20);
  }

  SUBCASE("malformed table gives no partial report") {
    const auto path = tmp_path("broken.gc");
    write_file(path, "name = Broken\nAAs = FFLL\n");
    const auto b = run("analyze --table " + path);
    CHECK(b.exit_code == 2);
    CHECK(b.out.empty());
    CHECK(run("analyze --table " + tmp_path("does-not-exist.gc")).exit_code == 2);
  }

  CHECK(run("analyze").exit_code == 2);
  CHECK(run("analyze --builtin standard --table x.gc").exit_code == 2);
  CHECK(run("analyze --builtin mito").exit_code == 2);
}

TEST_CASE("grover") {
  auto j = nlohmann::json::parse(run("grover solve-n --q 3 --format json").out);
  CHECK(std::abs(j["n"].get<double>() - 20.19) <= 0.05);

  j = nlohmann::json::parse(run("grover simulate --n 4 --q 1 --marked 2 --format json").out);
  CHECK(std::abs(j["final_probability"].get<double>() - 1.0) <= 1e-12);

  j = nlohmann::json::parse(run("grover solve-q --n 1 --format json").out);
  CHECK(j["q"].get<double>() == 0.0);

  const auto csv = run("grover simulate --n 20 --q 3 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("iteration,marked_probability,closed_form\n", 0) == 0);

  CHECK(run("grover solve-n --q -1").exit_code == 2);
  CHECK(run("grover solve-q --n 0.5").exit_code == 2);
  CHECK(run("grover simulate --n 4 --q 1 --marked 9").exit_code == 2);
  CHECK(run("grover simulate --n 100 --q 1 --max-n 64").exit_code == 3);
  CHECK(run("grover").exit_code == 2);
}

TEST_CASE("energy") {
  auto j = nlohmann::json::parse(run("energy --format json").out);
  CHECK(std::abs(j["base"]["delta_p_g_cm_s"].get<double>() - 6.2e-20) / 6.2e-20 <= 0.02);
  CHECK(std::abs(j["base"]["delta_e_erg"].get<double>() - 1.2e-15) / 1.2e-15 <= 0.05);

  j = nlohmann::json::parse(run("energy --scale 3 --format json").out);
  CHECK(j["energy_ratio"].get<double>() == 0.111111111111);

  CHECK(run("energy --delta-x 0").exit_code == 2);
  CHECK(run("energy --mass -1").exit_code == 2);
}

TEST_CASE("config file, flag precedence, output file, bad flags") {
  const auto cfg = tmp_path("qgc.toml");
  write_file(cfg, "format = \"json\"\n[count]\nk = 5\nr = 4\n");
  auto j = nlohmann::json::parse(run("--config " + cfg + " count").out);
  CHECK(j["multiset_count"] == "70");
  j = nlohmann::json::parse(run("--config " + cfg + " count --r 3").out);
  CHECK(j["multiset_count"] == "35");

  const auto out = tmp_path("count.json");
  CHECK(run("count --k 4 --r 3 --format json -o " + out).out.empty());
  std::ifstream in(out);
  j = nlohmann::json::parse(in);
  CHECK(j["multiset_count"] == "20");

  CHECK(run("count --format yaml").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}
