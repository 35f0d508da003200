#pragma once
// Integer Clifford algebra Cl(A) with e_i^2 = -1, e_i e_j = -e_j e_i, used to
// evaluate homotopy classes of frame loops in SO(A) through their Pin(A)
// lifts. The 1/sqrt(2) normalization of short lifts is dropped: products of
// lifts are scalar multiples of unit Pin elements and only the sign matters.
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridsq::pin {

struct PinError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// basis blade = bitmask over generator indices 1..31 (bit i-1 <-> e_i)
struct Clifford {
  std::map<std::uint32_t, long long> t;  // blade -> coeff, no zero entries

  static Clifford scalar(long long v);
  static Clifford e(int i);    // i != 0; negative i means -e_|i|
  Clifford operator+(const Clifford& o) const;
  Clifford operator-(const Clifford& o) const;
  Clifford operator*(const Clifford& o) const;
  bool is_scalar() const { return t.empty() || (t.size() == 1 && t.begin()->first == 0); }
  long long scalar_part() const {
    auto it = t.find(0);
    return it == t.end() ? 0 : it->second;
  }
  std::string str() const;
};

// lift of the short preferred rotation: 1 - v_i v_j (signed indices)
Clifford short_lift(int i, int j);
// lift of the long preferred path (half rotation): v_n v_m or v_m v_n
Clifford long_lift(int n, int m, int orientation);
// E_{ijk} = (1 - e_j e_i)(1 - e_k e_i)(1 - e_j e_k)(1 - e_i e_j)(1 - e_k e_i)
Clifford E(int i, int j, int k);

// 0 if the loop product is a positive scalar (nullhomotopic), 1 if negative.
// Throws PinError when the product is not scalar.
int eval_loop(const std::vector<Clifford>& lifts);

}  // namespace gridsq::pin
