#pragma once
// Framed 1-flow category of a grid diagram: objects are (generator, U-exponent
// vector u >= 0) with grading M_rel + 2*sum(u), 0-dimensional moduli are
// rectangles (sign bits), 1-dimensional moduli are index-2 domains with the
// two annuli over each O glued into a single interval (frame bits). Sq^2 is
// computed from boundary matchings and the degree-2 graphs Gamma(a, phi).
#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cdp.hpp"
#include "frame.hpp"
#include "gf2.hpp"
#include "grid.hpp"
#include "sign.hpp"

namespace gridsq {

struct FlowOptions {
  int trunc = 4;             // keep objects with sum(u) <= trunc
  std::vector<int> block_o;  // O markings whose domains are disallowed
  bool block_x = false;      // disallow domains containing any X
  std::size_t budget = 1000000;
};

struct FlowObject {
  Perm x;
  std::vector<int> u;
  int gr = 0;
};

std::string flow_object_key(const FlowObject& o);

// one rectangle point of a 0-dimensional moduli space M(a, b)
struct ModPoint {
  std::size_t a = 0, b = 0;
  std::string rect;  // canonical rectangle id
  int sign = 0;
};

// one interval component of a 1-dimensional moduli space M(a, c); endpoints
// are products (p, q) with p in M(a, b) and q in M(b, c)
struct ModInterval {
  std::size_t a = 0, c = 0;
  int frame = 0;
  std::array<std::pair<std::size_t, std::size_t>, 2> ends;  // point indices
  std::string key;  // domain key, or "glue(j)@..." for a glued annulus pair
};

struct FlowCategory {
  GridDiagram g;
  FlowOptions opt;
  SignAssignment s;
  FrameAssignment f;

  std::vector<FlowObject> objects;  // sorted by (grading, key)
  std::unordered_map<std::string, std::size_t> obj_index;
  int min_gr = 0, max_gr = 0;
  // [first, last) object range per grading, dense over [min_gr, max_gr]
  std::vector<std::pair<std::size_t, std::size_t>> gr_range;

  std::vector<ModPoint> points;
  std::vector<std::vector<std::size_t>> points_from;  // by source object
  std::vector<ModInterval> intervals;
  std::vector<std::vector<std::size_t>> intervals_from;

  std::vector<std::size_t> objects_at(int gr) const;
  std::size_t pos_in_grading(std::size_t obj) const;
};

FlowCategory build_flow_category(const GridDiagram& g, const SignAssignment& s,
                                 const FrameAssignment& f,
                                 const FlowOptions& opt);

// rows = objects at grading gr, cols = objects at gr - 1, entries = point
// counts mod 2
gf2::BitMatrix flow_boundary_matrix(const FlowCategory& fc, int gr);

// cochain cohomology at a grading (cocycles of delta = pairing with the
// boundary, modulo coboundaries); reps are cochains over objects_at(gr)
gf2::HomologyResult flow_cohomology(const FlowCategory& fc, int gr);

struct Sq2Options {
  std::uint64_t seed = 0;
  bool randomize_matching = false;
  bool randomize_direction = false;
};

// sq^phi over objects_at(gr + 2), for a cocycle phi over objects_at(gr)
gf2::BitVec sq2_cochain(const FlowCategory& fc, int gr, const gf2::BitVec& phi,
                        const Sq2Options& opt = {});

struct Sq2Map {
  int gr = 0;
  std::size_t rank_from = 0, rank_to = 0;
  gf2::BitMatrix m;  // rank_to x rank_from, in the cohomology rep bases
  bool operator==(const Sq2Map&) const = default;
};

Sq2Map sq2_map(const FlowCategory& fc, int gr, const Sq2Options& opt = {});

struct Sq2Summary {
  Sq2Map map;
  bool stable = false;  // unchanged when the truncation is raised by one
};

// Sq^2 on every grading representable at truncation T, with a second run at
// T + 1 to flag truncation-stable gradings
std::vector<Sq2Summary> sq2_all(const GridDiagram& g, const SignAssignment& s,
                                const FrameAssignment& f, const FlowOptions& opt,
                                const Sq2Options& sopt = {});

// coherence of the framed 1-flow category: boundaries of the 2-dimensional
// moduli (assembled from the recorded points and intervals) close up with
// total label 0 per (a, c) pair; returns violation descriptions
std::vector<std::string> validate_coherence(const FlowCategory& fc);

}  // namespace gridsq
