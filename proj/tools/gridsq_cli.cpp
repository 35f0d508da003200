// gridsq: grid homology Sq^2 pipeline front-end. Thin wrapper over the C API.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridsq.h"

using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// inline JSON (starts with '{' or '[') or a file path
std::string inline_or_file(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return arg;
  return read_input(arg);
}

struct CommonFlags {
  std::string grid_path;
  std::string pins;
  std::vector<int> block_o;
  bool block_x = false;
  int trunc = 4;
  std::string variant = "both";
  std::string format = "json";
  double budget = 1e6;
};

void add_common(CLI::App* cmd, CommonFlags& fl) {
  cmd->add_option("grid", fl.grid_path, "grid file (JSON or line form), - for stdin")
      ->required();
  cmd->add_option("--pins", fl.pins, "pin JSON ({\"R1\":0,..}) or file");
  cmd->add_option("--block-o", fl.block_o, "blocked O markings (0-based)")
      ->delimiter(',');
  cmd->add_flag("--block-x", fl.block_x, "disallow domains containing any X");
  cmd->add_option("--truncate", fl.trunc, "U-exponent truncation T")
      ->capture_default_str();
  cmd->add_option("--variant", fl.variant, "frame variant: 0, 1 or both")
      ->capture_default_str();
  cmd->add_option("--format", fl.format, "json or text")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--budget", fl.budget, "enumeration cap")
      ->capture_default_str();
}

std::string options_json(const CommonFlags& fl) {
  json o;
  if (!fl.pins.empty()) o["pins"] = json::parse(inline_or_file(fl.pins));
  o["block_o"] = fl.block_o;
  o["block_x"] = fl.block_x;
  o["truncate"] = fl.trunc;
  o["variant"] = fl.variant;
  o["budget"] = fl.budget;
  return o.dump();
}

std::string render_text(const json& rep, int depth = 0) {
  std::ostringstream ss;
  std::string pad(2 * depth, ' ');
  for (auto& [k, v] : rep.items()) {
    if (v.is_object() && depth < 2) {
      ss << pad << k << ":\n" << render_text(v, depth + 1);
    } else if (v.is_primitive()) {
      ss << pad << k << ": " << v.dump() << "\n";
    } else {
      std::string d = v.dump();
      if (d.size() <= 120)
        ss << pad << k << ": " << d << "\n";
      else
        ss << pad << k << ": [" << v.size() << " entries]\n";
    }
  }
  return ss.str();
}

int emit(int rc, char* out, gridsq_ctx* ctx, const std::string& format) {
  if (rc != GRIDSQ_OK) {
    std::cerr << "error: " << (ctx ? gridsq_last_error(ctx) : gridsq_global_error())
              << "\n";
    return rc;
  }
  if (format == "text")
    std::cout << render_text(json::parse(out));
  else
    std::cout << out << "\n";
  gridsq_free_string(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grid homology Sq^2 pipeline"};
  app.require_subcommand(1);

  // honored as an upper bound; the current implementation is single-threaded
  if (std::getenv("GRIDSQ_THREADS") != nullptr) {
    // nothing to configure yet
  }

  struct Sub {
    const char* name;
    const char* desc;
    int (*fn)(gridsq_ctx*, const char*, char**);
  };
  const Sub subs[] = {
      {"info", "grid summary and rectangle aliases", gridsq_info},
      {"sign", "solve the sign assignment", gridsq_sign},
      {"frame", "solve the frame assignment variants", gridsq_frame},
      {"sq2", "compute Sq^2 per grading", gridsq_sq2},
      {"verify", "run the invariant suites", gridsq_verify},
  };
  std::vector<CommonFlags> flags(std::size(subs));
  std::vector<CLI::App*> cmds;
  for (std::size_t i = 0; i < std::size(subs); i++) {
    CLI::App* c = app.add_subcommand(subs[i].name, subs[i].desc);
    add_common(c, flags[i]);
    cmds.push_back(c);
  }

  std::string loop_arg, loop_format = "json";
  CLI::App* loop = app.add_subcommand("eval-loop", "evaluate a Pin loop script");
  loop->add_option("script", loop_arg, "lift script JSON or file")->required();
  loop->add_option("--format", loop_format, "json or text")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (loop->parsed()) {
      char* out = nullptr;
      int rc = gridsq_eval_loop(inline_or_file(loop_arg).c_str(), &out);
      return emit(rc, out, nullptr, loop_format);
    }
    for (std::size_t i = 0; i < std::size(subs); i++) {
      if (!cmds[i]->parsed()) continue;
      std::string grid = read_input(flags[i].grid_path);
      gridsq_ctx* ctx = gridsq_ctx_new(grid.c_str());
      if (!ctx) {
        std::cerr << "error: " << gridsq_global_error() << "\n";
        return GRIDSQ_EINVAL;
      }
      char* out = nullptr;
      int rc = subs[i].fn(ctx, options_json(flags[i]).c_str(), &out);
      rc = emit(rc, out, ctx, flags[i].format);
      gridsq_ctx_free(ctx);
      return rc;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return GRIDSQ_EINVAL;
  }
  return 0;
}
