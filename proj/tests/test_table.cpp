#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "asymcover/errors.hpp"
#include "asymcover/table.hpp"

using namespace asymcover;

TEST_CASE("spec validation") {
  TableSpec s;
  s.n_min = 5;
  s.n_max = 4;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  TableSpec w;
  w.workers = 0;
  CHECK_THROWS_AS(w.validate(), InvalidArgument);
  TableSpec r;
  r.budget.random_trials = -1;
  CHECK_THROWS_AS(r.validate(), InvalidArgument);
}

TEST_CASE("cache json round trip") {
  BoundGrid g;
  g[{4, 1}] = BoundRecord{4, 1, 6, 6, Tag::i, Tag::e};
  g[{8, 2}] = BoundRecord{8, 2, 21, 24, Tag::mono, Tag::g};
  const auto j = grid_to_json(g);
  CHECK(j.contains("4,1"));
  CHECK(j["4,1"]["exact"] == true);
  CHECK(j["8,2"]["lower_tag"] == "mono");
  const BoundGrid back = grid_from_json(j);
  CHECK(back.at({8, 2}).upper == 24);
  CHECK(back.at({4, 1}).upper_tag == Tag::e);
  CHECK_THROWS_AS(grid_from_json(nlohmann::json::array()), ParseError);
  CHECK_THROWS_AS(grid_from_json(nlohmann::json{{"4;1", j["4,1"]}}), ParseError);
}

TEST_CASE("small table, cache and determinism") {
  const auto path = std::filesystem::temp_directory_path() / "asymcover_table_test.json";
  std::filesystem::remove(path);
  TableSpec spec;
  spec.n_min = 2;
  spec.n_max = 7;
  spec.R_min = 1;
  spec.R_max = 6;
  spec.cache_path = path.string();
  spec.workers = 3;
  const BoundGrid first = compute_table(spec);
  const std::string text = render_table(first, spec);
  CHECK(text.find("6[i/e]") != std::string::npos);
  CHECK(first.at({6, 1}).exact());
  CHECK(first.at({6, 1}).lower == 18);
  CHECK(std::filesystem::exists(path));

  const BoundGrid second = compute_table(spec);
  CHECK(render_table(second, spec) == text);
  std::ifstream in(path);
  std::stringstream once;
  once << in.rdbuf();
  compute_table(spec);
  std::ifstream in2(path);
  std::stringstream twice;
  twice << in2.rdbuf();
  CHECK(once.str() == twice.str());

  // same grid without cache and on one worker
  TableSpec plain = spec;
  plain.cache_path.reset();
  plain.workers = 1;
  CHECK(render_table(compute_table(plain), plain) == text);
  std::filesystem::remove(path);
}
