#pragma once

// Bounds table over a rectangle of (n, R) cells, with a JSON cache.

#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "asymcover/bounds.hpp"

namespace asymcover {

struct TableSpec {
  int n_min = 2;
  int n_max = 13;
  int R_min = 1;
  int R_max = 11;
  BoundOptions budget = BoundOptions::full();
  std::optional<std::string> cache_path;
  int workers = 1;

  void validate() const;  // throws InvalidArgument
};

/// Cells already in the cache are taken as they are; the rest are computed,
/// then the whole grid is propagated and the cache rewritten.
BoundGrid compute_table(const TableSpec& spec, std::ostream* diagnostics = nullptr);

/// Rows R, columns n; a cell is "v" or "a-b" with "[lower/upper]" tags.
std::string render_table(const BoundGrid& grid, const TableSpec& spec);

nlohmann::json grid_to_json(const BoundGrid& grid);
BoundGrid grid_from_json(const nlohmann::json& j);  // throws ParseError
nlohmann::json record_to_json(const BoundRecord& r);

}  // namespace asymcover
