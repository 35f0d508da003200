#pragma once
// JSON report assembly for the pipeline subcommands (info / sign / frame /
// sq2 / verify / eval-loop). Every report carries "schema": 1 and is
// deterministic for a fixed configuration.
#include <string>

#include <json.hpp>

#include "grid.hpp"

namespace gridsq::report {

using nlohmann::json;

struct Options {
  std::vector<std::pair<std::string, int>> pins;  // rect id or "R<i>" alias
  std::vector<int> block_o;
  bool block_x = false;
  int trunc = 4;
  int variant = -1;  // 0, 1, or -1 for both
  std::size_t budget = 1000000;
};

// options JSON: {"pins":{..}, "block_o":[..], "block_x":b, "truncate":t,
// "variant":"0"|"1"|"both", "budget":n}; all fields optional
Options parse_options(const std::string& text);

json info(const GridDiagram& g, const Options& o);
json sign_report(const GridDiagram& g, const Options& o);
json frame_report(const GridDiagram& g, const Options& o);
json sq2_report(const GridDiagram& g, const Options& o);
json verify_report(const GridDiagram& g, const Options& o);
// script: [{"short":[i,j]} | {"long":[n,m,orient]} | {"E":[i,j,k]}, ...]
json eval_loop_report(const std::string& script_text);

// lossy human summary of a report
std::string to_text(const json& rep);

}  // namespace gridsq::report
