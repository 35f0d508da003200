#pragma once
// The mod-2 complex of positive domains decorated with bubble counts N and
// ordered partitions lambda, its four-part differential, the taxonomy of
// low-grading generators, and the finite omega<=3 subcomplex as bit matrices.
#include <string>
#include <unordered_map>
#include <vector>

#include "gf2.hpp"
#include "grid.hpp"

namespace gridsq {

using Partition = std::vector<int>;  // ordered parts, each >= 1

struct PartitionMoves {
  std::vector<Partition> ue;  // unit enlargements (insert a 1)
  std::vector<Partition> ec;  // elementary coarsenings (merge adjacent)
  std::vector<Partition> ir;  // initial reduction (drop first part)
  std::vector<Partition> fr;  // final reduction (drop last part)
};
PartitionMoves partition_moves(const Partition& p);

struct CDPGen {
  Domain D;
  std::vector<int> N;               // bubble counts per O index
  std::vector<Partition> lam;       // lam[j] partitions N[j]
  bool operator==(const CDPGen&) const = default;
};

int grading(const CDPGen& g);   // maslov(D) + total partition length
int omega(const CDPGen& g);     // maslov(D) + |N|
std::string gen_key(const CDPGen& g);
CDPGen make_gen(const Domain& d);  // bubble-free
// consistency of N vs lam, part positivity
void check_gen(const CDPGen& g);

enum class Tax {
  T1_0, T1_1,
  T2_0a, T2_0b, T2_1, T2_2a, T2_2b,
  T3_0a, T3_0b, T3_0c, T3_1a, T3_1b,
  T3_2a, T3_2b, T3_2c, T3_3a, T3_3b, T3_3c,
  Other
};
const char* tax_name(Tax t);
Tax classify(const GridDiagram& gr, const CDPGen& g);

// mod-2 reduced differential terms, sorted by key
std::vector<CDPGen> differential(const GridDiagram& gr, const CDPGen& g);

struct SubComplex {
  int n = 0;
  int omega_max = 3;
  // basis[k] sorted by gen_key; index[k] inverts it
  std::vector<std::vector<CDPGen>> basis;
  std::vector<std::unordered_map<std::string, std::size_t>> index;
  // bnd[k] (k=1..3): row per grading-k generator over the grading-(k-1) basis
  std::vector<gf2::BitMatrix> bnd;
};
SubComplex build_subcomplex(const GridDiagram& gr, int omega_max = 3,
                            std::size_t budget = 1000000);

}  // namespace gridsq
