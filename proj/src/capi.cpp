#include "gridsq.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "grid.hpp"
#include "report.hpp"

using gridsq::GridDiagram;
using gridsq::GridError;

struct gridsq_ctx {
  GridDiagram g;
  std::string err;
};

namespace {

std::string g_global_err;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// GridError = rejected input (1); anything else = broken invariant (2)
template <typename Fn>
int wrap(gridsq_ctx* ctx, const char* options, char** out_json, Fn&& fn) {
  if (!ctx || !out_json) return GRIDSQ_EINVAL;
  *out_json = nullptr;
  ctx->err.clear();
  try {
    gridsq::report::Options o =
        gridsq::report::parse_options(options ? options : "");
    *out_json = dup_string(fn(ctx->g, o).dump());
    return GRIDSQ_OK;
  } catch (const GridError& e) {
    ctx->err = e.what();
    return GRIDSQ_EINVAL;
  } catch (const std::exception& e) {
    ctx->err = e.what();
    return GRIDSQ_EINTERNAL;
  }
}

}  // namespace

extern "C" {

gridsq_ctx* gridsq_ctx_new(const char* grid_text) {
  g_global_err.clear();
  if (!grid_text) {
    g_global_err = "null grid text";
    return nullptr;
  }
  try {
    GridDiagram g = GridDiagram::parse(grid_text);
    g.validate();
    return new gridsq_ctx{std::move(g), {}};
  } catch (const std::exception& e) {
    g_global_err = e.what();
    return nullptr;
  }
}

void gridsq_ctx_free(gridsq_ctx* ctx) { delete ctx; }

const char* gridsq_last_error(const gridsq_ctx* ctx) {
  return ctx ? ctx->err.c_str() : "null context";
}

const char* gridsq_global_error(void) { return g_global_err.c_str(); }

int gridsq_info(gridsq_ctx* ctx, const char* options, char** out_json) {
  return wrap(ctx, options, out_json,
              [](const GridDiagram& g, const gridsq::report::Options& o) {
                return gridsq::report::info(g, o);
              });
}

int gridsq_sign(gridsq_ctx* ctx, const char* options, char** out_json) {
  return wrap(ctx, options, out_json,
              [](const GridDiagram& g, const gridsq::report::Options& o) {
                return gridsq::report::sign_report(g, o);
              });
}

int gridsq_frame(gridsq_ctx* ctx, const char* options, char** out_json) {
  return wrap(ctx, options, out_json,
              [](const GridDiagram& g, const gridsq::report::Options& o) {
                return gridsq::report::frame_report(g, o);
              });
}

int gridsq_sq2(gridsq_ctx* ctx, const char* options, char** out_json) {
  return wrap(ctx, options, out_json,
              [](const GridDiagram& g, const gridsq::report::Options& o) {
                return gridsq::report::sq2_report(g, o);
              });
}

int gridsq_verify(gridsq_ctx* ctx, const char* options, char** out_json) {
  return wrap(ctx, options, out_json,
              [](const GridDiagram& g, const gridsq::report::Options& o) {
                return gridsq::report::verify_report(g, o);
              });
}

int gridsq_eval_loop(const char* script_json, char** out_json) {
  if (!script_json || !out_json) return GRIDSQ_EINVAL;
  *out_json = nullptr;
  g_global_err.clear();
  try {
    *out_json = dup_string(gridsq::report::eval_loop_report(script_json).dump());
    return GRIDSQ_OK;
  } catch (const std::exception& e) {
    g_global_err = e.what();
    return GRIDSQ_EINVAL;
  }
}

void gridsq_free_string(char* s) { std::free(s); }

}  // extern "C"
