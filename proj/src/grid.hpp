#pragma once
// Grid diagrams on the torus, generators (permutations), positive domains,
// rectangles, Maslov index, annuli. Coordinates: coeffs[col][row], rows
// counted bottom-up, everything cyclic mod n. Lattice point (i,r) is the
// intersection of the vertical circle left of column i with the horizontal
// circle below row r; the generator point for column i sits at (i, perm[i]).
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridsq {

using Perm = std::vector<int>;

struct GridError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridDiagram {
  int n = 0;
  std::vector<int> X, O;  // X[i]/O[i] = row of the marking in column i
  void validate() const;
  // JSON {"n":..,"X":[..],"O":[..]} or line form "n / X r0..r(n-1) / O .."
  static GridDiagram parse(const std::string& text);
};

std::string perm_str(const Perm& p);

struct Domain {
  int n = 0;
  Perm from, to;
  std::vector<int> c;  // c[col*n+row] >= 0

  int at(int col, int row) const {
    col %= n; if (col < 0) col += n;
    row %= n; if (row < 0) row += n;
    return c[std::size_t(col) * n + row];
  }
  int& ref(int col, int row) { return c[std::size_t(col) * n + row]; }
  bool is_constant() const {
    for (int v : c) if (v) return false;
    return true;
  }
  int total() const {
    int t = 0;
    for (int v : c) t += v;
    return t;
  }
  bool operator==(const Domain&) const = default;
};

Domain constant_domain(int n, const Perm& x);
// boundary condition + non-negativity (from/to assumed permutations)
bool domain_valid(const Domain& d);
// corner-average Maslov index; throws if the 4-scaled sum is not divisible
int maslov(const Domain& d);
Domain compose(const Domain& d, const Domain& e);  // d.to must equal e.from
// E with D = E * C (C removed at the end); nullopt if not a positive domain
std::optional<Domain> subtract_final(const Domain& d, const Domain& c);
// E with D = C * E
std::optional<Domain> subtract_initial(const Domain& d, const Domain& c);

// canonical keys
std::string domain_key(const Domain& d);

struct Rect {
  Domain dom;
  int i1, j1, i2, j2;  // bl=(i1,j1), tr=(i2,j2) lattice corners
};
// every empty rectangle from x (interior free of the other n-2 points)
std::vector<Rect> rectangles_from(const GridDiagram& g, const Perm& x);
std::string rect_id(const Rect& r);
// recover the canonical ID of a mu=1 domain
std::string rect_id_of_domain(const Domain& d);

enum class AnnulusKind { NotAnnulus, Horizontal, Vertical };
struct AnnulusInfo {
  AnnulusKind kind = AnnulusKind::NotAnnulus;
  int j = -1;  // index of the O marking the annulus passes through
};
AnnulusInfo annulus_info(const GridDiagram& g, const Domain& d);
Domain annulus_h(const GridDiagram& g, int j, const Perm& x);  // row of O_j
Domain annulus_v(const GridDiagram& g, int j, const Perm& x);  // column of O_j

// rectangles C with D = E * C / D = C * E for a positive domain E
std::vector<Domain> final_rectangles(const GridDiagram& g, const Domain& d);
std::vector<Domain> initial_rectangles(const GridDiagram& g, const Domain& d);

struct ContainsAnnulus {
  bool found = false;
  // true when D = A * R with A = R * S for the same initial rectangle R
  bool initial_rect_flag = false;
  Domain a;
};
ContainsAnnulus contains_annulus(const GridDiagram& g, const Domain& d);

// all positive domains with mu <= mu_max, deduplicated, sorted by key
std::vector<Domain> enumerate_domains(const GridDiagram& g, int mu_max,
                                      std::size_t budget = 1000000);

std::vector<Perm> all_perms(int n);

// relative Maslov grading of generators, anchored at the identity:
// M(x) - M(y) = maslov(R) - 2*(O count of R) over rectangle edges
std::vector<int> relative_maslov(const GridDiagram& g);
int o_count(const GridDiagram& g, const Domain& d);  // sum of coeffs at O cells
int x_count(const GridDiagram& g, const Domain& d);
std::vector<int> o_vector(const GridDiagram& g, const Domain& d);  // per O_j

}  // namespace gridsq
