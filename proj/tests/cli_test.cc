// Copyright 2026 The sdgen Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.h"
#include "sdgen/edge_list.h"

namespace sdgen {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sdgen");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("sdgen_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::size_t data_lines(const std::string& text) {
  std::size_t n = 0;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) n += !line.empty() && line[0] != '#';
  return n;
}

TEST_CASE("generate writes the requested graph reproducibly") {
  const fs::path dir = scratch("gen");
  const std::string a = (dir / "a.edges").string();
  const std::string b = (dir / "b.edges").string();
  const std::string stats = (dir / "a.json").string();
  auto r = run_cli({"generate", "--nodes", "266", "--edges", "1427", "--seed",
                    "7", "-o", a, "--stats", stats});
  REQUIRE(r.code == 0);
  const std::string text = slurp(a);
  CHECK(text.rfind("#nodes=266\n", 0) == 0);
  CHECK(data_lines(text) == 1427);
  const auto js = nlohmann::json::parse(slurp(stats));
  CHECK(js["node_count"] == 266);
  CHECK(js["edge_count"] == 1427);

  REQUIRE(run_cli({"generate", "--nodes", "266", "--edges", "1427", "--seed",
                   "7", "-o", b})
              .code == 0);
  CHECK(slurp(b) == text);

  r = run_cli({"generate", "--nodes", "5", "--edges", "0", "-o", a});
  CHECK(r.code == 0);
  CHECK(slurp(a) == "#nodes=5\n");
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == cli::kUsage);
  CHECK(run_cli({"generate", "--nodes", "x", "--edges", "1"}).code ==
        cli::kUsage);
  CHECK(run_cli({"--help"}).code == cli::kOk);
  const auto over = run_cli({"generate", "--nodes", "3", "--edges", "7"});
  CHECK(over.code == cli::kData);
  CHECK(over.err.find("error:") == 0);
  CHECK(run_cli({"compare", "--reference", "/nonexistent/a", "--candidate",
                 "/nonexistent/b"})
            .code == cli::kData);
  // Pure preferential targets saturate a hub and exhaust the resampling cap.
  CHECK(run_cli({"generate", "--nodes", "30", "--edges", "200", "--e1", "0",
                 "--e2", "0"})
            .code == cli::kLimit);
}

TEST_CASE("evolve, compare and spectrum") {
  const fs::path dir = scratch("evolve");
  const std::string base = (dir / "base.edges").string();
  const std::string grown = (dir / "grown.edges").string();
  REQUIRE(run_cli({"generate", "--nodes", "100", "--edges", "400", "-o", base})
              .code == 0);
  REQUIRE(run_cli({"evolve", "--base", base, "--new-nodes", "20",
                   "--new-edges", "90", "--seed", "3", "-o", grown})
              .code == 0);
  const Digraph g = read_edge_list(fs::path(grown));
  CHECK(g.node_count() == 120);
  CHECK(g.edge_count() == 490);
  const auto fresh = read_node_list(fs::path(grown + ".new"));
  REQUIRE(fresh.size() == 20);
  CHECK(fresh.front() == 100);

  const std::string same = (dir / "same.edges").string();
  REQUIRE(run_cli({"evolve", "--base", base, "--new-nodes", "0",
                   "--new-edges", "0", "-o", same})
              .code == 0);
  CHECK(slurp(same) == slurp(base));

  auto self = run_cli({"compare", "--reference", grown, "--candidate", grown,
                       "--spectrum"});
  REQUIRE(self.code == 0);
  auto js = nlohmann::json::parse(self.out);
  CHECK(js["ks_in"] == 0.0);
  CHECK(js["msd_out"] == 0.0);
  CHECK(js["spectral_distance"] == 0.0);

  // Restricting to every node equals the unrestricted comparison.
  const std::string other = (dir / "other.edges").string();
  REQUIRE(run_cli({"evolve", "--base", base, "--new-nodes", "20",
                   "--new-edges", "90", "--seed", "4", "-o", other})
              .code == 0);
  const std::string all = (dir / "all.ids").string();
  {
    std::ofstream f(all);
    for (int v = 0; v < 120; ++v) f << v << '\n';
  }
  const auto full = run_cli({"compare", "--reference", grown, "--candidate",
                             other});
  const auto everything = run_cli({"compare", "--reference", grown,
                                   "--candidate", other, "--new-nodes", all});
  CHECK(full.out == everything.out);
  const auto restricted =
      run_cli({"compare", "--reference", grown, "--candidate", other,
               "--new-nodes", grown + ".new"});
  CHECK(restricted.code == 0);
  CHECK(restricted.out != full.out);

  const auto spec = run_cli({"spectrum", "-i", grown});
  REQUIRE(spec.code == 0);
  CHECK(spec.out.rfind("magnitude\n", 0) == 0);
  CHECK(data_lines(spec.out) == 121);  // header counts as a line here
}

TEST_CASE("tune") {
  const fs::path dir = scratch("tune");
  const std::string ref = (dir / "ref.edges").string();
  REQUIRE(run_cli({"generate", "--nodes", "150", "--edges", "600", "-o", ref})
              .code == 0);
  const std::string grid = (dir / "grid.csv").string();
  auto r = run_cli({"tune", "--reference", ref, "--replicates", "2", "--axis",
                    "e1=0.45", "--axis", "e2=0.1", "--dump-grid", grid});
  REQUIRE(r.code == 0);
  auto js = nlohmann::json::parse(r.out);
  CHECK(js["best_params"]["e1"] == 0.45);
  CHECK(js["best_params"]["e2"] == 0.1);
  CHECK(js["objective"] == "minimax_msd");
  CHECK(slurp(grid).rfind("e1,e2,score\n", 0) == 0);

  r = run_cli({"tune", "--reference", ref, "--model", "bollobas",
               "--replicates", "1", "--axis", "alpha=0.4", "--axis",
               "gamma=0.4", "--axis", "delta=1"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["objective"] == "ks_max");

  CHECK(run_cli({"tune", "--reference", ref, "--axis", "e3=1"}).code ==
        cli::kData);
  CHECK(run_cli({"tune", "--reference", ref, "--axis", "e1"}).code ==
        cli::kData);
  CHECK(run_cli({"tune", "--reference", ref, "--model", "sedge"}).code ==
        cli::kData);
}

TEST_CASE("report") {
  const fs::path dir = scratch("report");
  const fs::path manifest = dir / "corpus.json";
  {
    std::ofstream f(manifest);
    f << "[]";
  }
  auto r = run_cli({"report", "--manifest", manifest.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "name,nodes,edges,ks_in,ks_out,msd_in,msd_out\n");
  CHECK(run_cli({"report", "--manifest", manifest.string(), "--mode", "x"})
            .code == cli::kData);
  {
    std::ofstream f(manifest);
    f << R"([{"name": "gone", "path": "gone.edges"}])";
  }
  r = run_cli({"report", "--manifest", manifest.string()});
  CHECK(r.code == cli::kData);
  CHECK(r.err.find("gone.edges") != std::string::npos);
}

}  // namespace
}  // namespace sdgen
