#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "cdp.hpp"
#include "clifford.hpp"
#include "flow.hpp"
#include "frame.hpp"
#include "gf2.hpp"
#include "obstruction.hpp"
#include "sign.hpp"

namespace gridsq::report {

namespace {

// global rectangle order: all empty rectangles over all generators, sorted by
// canonical id; "R<i>" aliases are 1-based positions in this list
std::vector<std::string> all_rect_ids(const GridDiagram& g) {
  std::vector<std::string> ids;
  for (const Perm& p : all_perms(g.n))
    for (const Rect& r : rectangles_from(g, p)) ids.push_back(rect_id(r));
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string resolve_rect(const GridDiagram& g, const std::string& key) {
  if (!key.empty() && key[0] == 'R' &&
      key.find_first_not_of("0123456789", 1) == std::string::npos &&
      key.size() > 1) {
    auto ids = all_rect_ids(g);
    std::size_t i = std::stoul(key.substr(1));
    if (i < 1 || i > ids.size())
      throw GridError("pin alias out of range: " + key);
    return ids[i - 1];
  }
  return key;
}

std::vector<std::pair<std::string, int>> resolve_pins(const GridDiagram& g,
                                                      const Options& o) {
  std::vector<std::pair<std::string, int>> pins;
  for (const auto& [k, v] : o.pins) pins.push_back({resolve_rect(g, k), v});
  return pins;
}

std::vector<int> variants_of(const Options& o) {
  if (o.variant == 0 || o.variant == 1) return {o.variant};
  return {0, 1};
}

json matrix_json(const gf2::BitMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; i++) {
    std::string r(m.cols, '0');
    for (std::size_t j = 0; j < m.cols; j++)
      if (m.get(i, j)) r[j] = '1';
    rows.push_back(r);
  }
  return rows;
}

json frame_values(const SubComplex& sc, const FrameAssignment& fa) {
  json vals = json::object();
  for (const CDPGen& g : sc.basis[2]) vals[gen_key(g)] = fa.of_key(gen_key(g));
  return vals;
}

json sq2_variant_json(const GridDiagram& g, const SubComplex& sc,
                      const SignAssignment& s, const Options& o, int variant) {
  FrameAssignment fa = solve_frame(g, sc, s, variant);
  FlowOptions fo{o.trunc, o.block_o, o.block_x, o.budget};
  json gradings = json::object();
  for (const Sq2Summary& sum : sq2_all(g, s, fa, fo)) {
    json e;
    e["rank_from"] = sum.map.rank_from;
    e["rank_to"] = sum.map.rank_to;
    e["sq2"] = matrix_json(sum.map.m);
    e["stable"] = sum.stable;
    gradings[std::to_string(sum.map.gr)] = e;
  }
  json out;
  out["variant"] = variant;
  out["gradings"] = gradings;
  return out;
}

}  // namespace

Options parse_options(const std::string& text) {
  Options o;
  if (text.empty()) return o;
  try {
    json j = json::parse(text);
    if (j.contains("pins"))
      for (auto& [k, v] : j["pins"].items())
        o.pins.push_back({k, v.get<int>()});
    if (j.contains("block_o")) o.block_o = j["block_o"].get<std::vector<int>>();
    if (j.contains("block_x")) o.block_x = j["block_x"].get<bool>();
    if (j.contains("truncate")) o.trunc = j["truncate"].get<int>();
    if (j.contains("variant")) {
      if (j["variant"].is_number()) o.variant = j["variant"].get<int>();
      else if (j["variant"].get<std::string>() != "both")
        o.variant = std::stoi(j["variant"].get<std::string>());
    }
    if (j.contains("budget")) o.budget = std::size_t(j["budget"].get<double>());
  } catch (const json::exception& e) {
    throw GridError(std::string("options: ") + e.what());
  }
  return o;
}

json info(const GridDiagram& g, const Options& o) {
  json out;
  out["schema"] = 1;
  out["n"] = g.n;
  out["X"] = g.X;
  out["O"] = g.O;
  std::size_t nf = 1;
  for (int i = 2; i <= g.n; i++) nf *= i;
  out["generators"] = nf;
  json rects = json::array();
  auto ids = all_rect_ids(g);
  for (std::size_t i = 0; i < ids.size(); i++)
    rects.push_back({{"alias", "R" + std::to_string(i + 1)}, {"id", ids[i]}});
  out["rectangles"] = rects;
  (void)o;
  return out;
}

json sign_report(const GridDiagram& g, const Options& o) {
  auto pins = resolve_pins(g, o);
  SignAssignment s = solve_sign(g, pins, o.budget);
  json out;
  out["schema"] = 1;
  json jp = json::object();
  for (auto& [k, v] : pins) jp[k] = v;
  out["pins"] = jp;
  json vals = json::object();
  auto ids = all_rect_ids(g);
  for (std::size_t i = 0; i < ids.size(); i++) {
    json e;
    e["alias"] = "R" + std::to_string(i + 1);
    e["s"] = s.of_id(ids[i]);
    vals[ids[i]] = e;
  }
  out["values"] = vals;
  return out;
}

json frame_report(const GridDiagram& g, const Options& o) {
  SignAssignment s = solve_sign(g, resolve_pins(g, o), o.budget);
  SubComplex sc = build_subcomplex(g, 3, o.budget);
  json out;
  out["schema"] = 1;
  json vs = json::array();
  for (int v : variants_of(o)) {
    FrameAssignment fa = solve_frame(g, sc, s, v);
    json e;
    e["variant"] = v;
    e["pins"] = {{"pair_classes", 0}, {"extra_class", v}};
    e["pinned_cycles"] = fa.pinned_cycles;
    e["values"] = frame_values(sc, fa);
    vs.push_back(e);
  }
  out["variants"] = vs;
  return out;
}

json sq2_report(const GridDiagram& g, const Options& o) {
  SignAssignment s = solve_sign(g, resolve_pins(g, o), o.budget);
  SubComplex sc = build_subcomplex(g, 3, o.budget);
  json out;
  out["schema"] = 1;
  out["flavor"] = {{"block_o", o.block_o},
                   {"block_x", o.block_x},
                   {"truncate", o.trunc}};
  json vs = json::array();
  for (int v : variants_of(o)) vs.push_back(sq2_variant_json(g, sc, s, o, v));
  out["variants"] = vs;
  return out;
}

json verify_report(const GridDiagram& g, const Options& o) {
  json checks = json::array();
  bool all_ok = true;
  auto run = [&](const std::string& name, auto&& fn) {
    json c;
    c["name"] = name;
    try {
      std::string detail = fn();
      if (detail == "skip") {
        c["status"] = "skip";
      } else {
        c["status"] = detail.empty() ? "pass" : "fail";
        if (!detail.empty()) {
          c["detail"] = detail;
          all_ok = false;
        }
      }
    } catch (const std::exception& e) {
      c["status"] = "error";
      c["detail"] = e.what();
      all_ok = false;
    }
    checks.push_back(c);
  };

  run("grid_valid", [&] { g.validate(); return std::string(); });

  SignAssignment s;
  run("sign_solvable_and_verified", [&] {
    s = solve_sign(g, resolve_pins(g, o), o.budget);
    auto bad = verify_sign(g, s, o.budget);
    return bad.empty() ? std::string() : bad[0];
  });

  SubComplex sc;
  bool have_sc = false;
  run("subcomplex_d_squared_zero", [&] {
    sc = build_subcomplex(g, 3, o.budget);  // throws on any closure violation
    have_sc = true;
    return std::string();
  });

  run("obstruction_oracle_agreement", [&] {
    if (!have_sc || sc.basis[3].size() > 20000) return std::string("skip");
    for (const CDPGen& gen : sc.basis[3]) {
      Tax t = classify(g, gen);
      if (t != Tax::T3_1a && t != Tax::T3_1b && t != Tax::T3_0c) continue;
      if (o2(g, gen, s) != o2_pin_oracle(g, gen, s))
        return "oracle mismatch at " + gen_key(gen);
    }
    return std::string();
  });

  run("h2_rank", [&] {
    if (!have_sc || sc.basis[2].size() > 40000) return std::string("skip");
    auto h2 = gf2::homology(sc.bnd[2], sc.bnd[3]);
    std::size_t expect = std::size_t(g.n) * (g.n - 1) / 2 + 1;
    if (h2.rank != expect)
      return "H2 rank " + std::to_string(h2.rank) + ", expected " +
             std::to_string(expect);
    return std::string();
  });

  FrameAssignment fas[2];
  bool have_f = false;
  run("frame_residual_both_variants", [&] {
    if (!have_sc || sc.basis[2].size() > 40000) return std::string("skip");
    for (int v : {0, 1}) {
      fas[v] = solve_frame(g, sc, s, v);
      auto bad = verify_frame(g, sc, s, fas[v]);
      if (!bad.empty()) return "residual at " + bad[0];
    }
    have_f = true;
    if (coboundary_equivalent(sc, fas[0], fas[1]))
      return std::string("variants coboundary-equivalent");
    return std::string();
  });

  run("flow_coherence", [&] {
    if (!have_f) return std::string("skip");
    FlowOptions fo{o.trunc, o.block_o, o.block_x, o.budget};
    for (int v : {0, 1}) {
      FlowCategory fc = build_flow_category(g, s, fas[v], fo);
      auto bad = validate_coherence(fc);
      if (!bad.empty()) return bad[0];
    }
    return std::string();
  });

  run("sq2_independence", [&] {
    if (!have_f || g.n > 3) return std::string("skip");
    FlowOptions fo{o.trunc, o.block_o, o.block_x, o.budget};
    FlowCategory fc = build_flow_category(g, s, fas[0], fo);
    for (int gr = fc.min_gr; gr <= fc.max_gr - 2; gr++) {
      Sq2Map base = sq2_map(fc, gr);
      for (std::uint64_t t = 1; t <= 3; t++) {
        Sq2Options so{t, true, true};
        if (!(sq2_map(fc, gr, so) == base))
          return "matching/direction dependence at grading " +
                 std::to_string(gr);
      }
    }
    return std::string();
  });

  json out;
  out["schema"] = 1;
  out["ok"] = all_ok;
  out["checks"] = checks;
  return out;
}

json eval_loop_report(const std::string& script_text) {
  json j = json::parse(script_text);
  std::vector<pin::Clifford> lifts;
  for (const json& f : j) {
    if (f.contains("short"))
      lifts.push_back(pin::short_lift(f["short"][0], f["short"][1]));
    else if (f.contains("long"))
      lifts.push_back(pin::long_lift(f["long"][0], f["long"][1], f["long"][2]));
    else if (f.contains("E"))
      lifts.push_back(pin::E(f["E"][0], f["E"][1], f["E"][2]));
    else
      throw GridError("eval-loop: unknown factor " + f.dump());
  }
  pin::Clifford prod = pin::Clifford::scalar(1);
  for (const auto& l : lifts) prod = prod * l;
  json out;
  out["schema"] = 1;
  out["class"] = pin::eval_loop(lifts);
  out["product"] = prod.str();
  return out;
}

std::string to_text(const json& rep) {
  std::ostringstream ss;
  for (auto& [k, v] : rep.items()) {
    if (v.is_primitive()) {
      ss << k << ": " << v.dump() << "\n";
    } else {
      std::string d = v.dump();
      if (d.size() <= 200)
        ss << k << ": " << d << "\n";
      else
        ss << k << ": [" << v.size() << " entries]\n";
    }
  }
  return ss.str();
}

}  // namespace gridsq::report
