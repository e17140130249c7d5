#include "asymcover/table.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "asymcover/code_io.hpp"
#include "asymcover/errors.hpp"

namespace asymcover {

namespace {

std::string cell_key(int n, int R) { return std::to_string(n) + "," + std::to_string(R); }

std::pair<int, int> parse_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw ParseError("bad cache key '" + key + "'");
  try {
    return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ParseError("bad cache key '" + key + "'");
  }
}

BoundGrid load_cache(const std::string& path, std::ostream* diagnostics) {
  if (!std::filesystem::exists(path)) return {};
  std::ifstream in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("cache " + path + ": " + e.what());
  }
  BoundGrid grid = grid_from_json(j);
  if (diagnostics) *diagnostics << "cache: " << grid.size() << " cells from " << path << "\n";
  return grid;
}

}  // namespace

void TableSpec::validate() const {
  if (n_min < 1 || n_max > kMaxDimension || n_min > n_max) throw InvalidArgument("table: bad n range");
  if (R_min < 0 || R_min > R_max) throw InvalidArgument("table: bad R range");
  if (workers < 1) throw InvalidArgument("table: workers must be positive");
  if (budget.random_trials < 0 || budget.exact_limits.time_limit < 0)
    throw InvalidArgument("table: budget fields must be nonnegative");
}

nlohmann::json record_to_json(const BoundRecord& r) {
  return {{"n", r.n},
          {"R", r.R},
          {"lower", r.lower},
          {"upper", r.upper},
          {"lower_tag", std::string(tag_name(r.lower_tag))},
          {"upper_tag", std::string(tag_name(r.upper_tag))},
          {"exact", r.exact()}};
}

nlohmann::json grid_to_json(const BoundGrid& grid) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [key, r] : grid) {
    auto rec = record_to_json(r);
    rec.erase("n");
    rec.erase("R");
    j[cell_key(key.first, key.second)] = rec;
  }
  return j;
}

BoundGrid grid_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("bounds cache must be a JSON object");
  BoundGrid grid;
  for (const auto& [key, v] : j.items()) {
    const auto [n, R] = parse_key(key);
    BoundRecord r;
    r.n = n;
    r.R = R;
    try {
      r.lower = v.at("lower").get<std::int64_t>();
      r.upper = v.at("upper").get<std::int64_t>();
      r.lower_tag = tag_from_name(v.at("lower_tag").get<std::string>());
      r.upper_tag = tag_from_name(v.at("upper_tag").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("cache cell " + key + ": " + e.what());
    }
    if (r.lower < 1 || r.lower > r.upper) throw ParseError("cache cell " + key + ": bad bracket");
    grid[{n, R}] = r;
  }
  return grid;
}

BoundGrid compute_table(const TableSpec& spec, std::ostream* diagnostics) {
  spec.validate();
  BoundGrid cached;
  if (spec.cache_path) cached = load_cache(*spec.cache_path, diagnostics);

  std::vector<std::pair<int, int>> cells, todo;
  for (int R = spec.R_min; R <= spec.R_max; ++R)
    for (int n = spec.n_min; n <= spec.n_max; ++n) {
      cells.push_back({n, R});
      if (!cached.count({n, R})) todo.push_back({n, R});
    }

  BoundsEngine engine(spec.budget);
  engine.prefetch(todo, spec.workers);
  BoundGrid grid;
  for (const auto& [n, R] : cells) {
    if (auto it = cached.find({n, R}); it != cached.end()) {
      grid[{n, R}] = it->second;
    } else {
      grid[{n, R}] = engine.cell(n, R);
      if (diagnostics) *diagnostics << "(" << n << "," << R << ") " << grid[{n, R}].render() << "\n";
    }
  }
  propagate(grid);
  if (spec.cache_path) {
    // keep cached cells outside this spec's range
    BoundGrid merged = cached;
    for (const auto& [key, r] : grid) merged[key] = r;
    write_file_atomic(*spec.cache_path, grid_to_json(merged).dump(2) + "\n");
  }
  return grid;
}

std::string render_table(const BoundGrid& grid, const TableSpec& spec) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"R\\n"};
  for (int n = spec.n_min; n <= spec.n_max; ++n) header.push_back(std::to_string(n));
  rows.push_back(header);
  for (int R = spec.R_min; R <= spec.R_max; ++R) {
    std::vector<std::string> row{std::to_string(R)};
    for (int n = spec.n_min; n <= spec.n_max; ++n) {
      auto it = grid.find({n, R});
      row.push_back(it == grid.end() ? "?" : it->second.render_compact());
    }
    rows.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out << " | ";
      out << std::string(width[c] - rows[r][c].size(), ' ') << rows[r][c];
    }
    out << "\n";
    if (r == 0) {
      for (std::size_t c = 0; c < width.size(); ++c) out << (c ? "-+-" : "") << std::string(width[c], '-');
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace asymcover
