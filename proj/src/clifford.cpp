#include "clifford.hpp"

#include <bit>
#include <cstdlib>
#include <vector>

namespace gridsq::pin {

Clifford Clifford::scalar(long long v) {
  Clifford c;
  if (v) c.t[0] = v;
  return c;
}

Clifford Clifford::e(int i) {
  if (i == 0) throw PinError("clifford: generator index 0");
  int a = std::abs(i);
  if (a > 31) throw PinError("clifford: generator index too large");
  Clifford c;
  c.t[std::uint32_t(1) << (a - 1)] = i > 0 ? 1 : -1;
  return c;
}

Clifford Clifford::operator+(const Clifford& o) const {
  Clifford r = *this;
  for (auto& [m, v] : o.t) {
    long long nv = (r.t.count(m) ? r.t[m] : 0) + v;
    if (nv) r.t[m] = nv; else r.t.erase(m);
  }
  return r;
}

Clifford Clifford::operator-(const Clifford& o) const {
  Clifford r = *this;
  for (auto& [m, v] : o.t) {
    long long nv = (r.t.count(m) ? r.t[m] : 0) - v;
    if (nv) r.t[m] = nv; else r.t.erase(m);
  }
  return r;
}

// sign of e_S * e_T: transposition count, plus e_i^2 = -1 per common index
static int blade_sign(std::uint32_t s, std::uint32_t tmask) {
  int swaps = std::popcount(s & tmask);
  std::uint32_t x = tmask;
  while (x) {
    int b = std::countr_zero(x);
    x &= x - 1;
    // bits of s strictly greater than b
    swaps += std::popcount(s >> (b + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

Clifford Clifford::operator*(const Clifford& o) const {
  Clifford r;
  for (auto& [m1, v1] : t)
    for (auto& [m2, v2] : o.t) {
      long long coeff = v1 * v2 * blade_sign(m1, m2);
      if (std::abs(v1) > (1ll << 60) / (std::abs(v2) + 1))
        throw PinError("clifford: coefficient overflow");
      std::uint32_t m = m1 ^ m2;
      long long nv = (r.t.count(m) ? r.t[m] : 0) + coeff;
      if (nv) r.t[m] = nv; else r.t.erase(m);
    }
  return r;
}

std::string Clifford::str() const {
  if (t.empty()) return "0";
  std::string s;
  for (auto& [m, v] : t) {
    if (!s.empty()) s += " + ";
    s += std::to_string(v);
    std::uint32_t x = m;
    while (x) {
      int b = std::countr_zero(x);
      x &= x - 1;
      s += "*e" + std::to_string(b + 1);
    }
  }
  return s;
}

Clifford short_lift(int i, int j) {
  if (std::abs(i) == std::abs(j)) throw PinError("short_lift: equal indices");
  return Clifford::scalar(1) - Clifford::e(i) * Clifford::e(j);
}

Clifford long_lift(int n, int m, int orientation) {
  if (std::abs(n) == std::abs(m)) throw PinError("long_lift: equal indices");
  return orientation ? Clifford::e(m) * Clifford::e(n)
                     : Clifford::e(n) * Clifford::e(m);
}

Clifford E(int i, int j, int k) {
  if (i == j || j == k || i == k) throw PinError("E: repeated index");
  return short_lift(j, i) * short_lift(k, i) * short_lift(j, k) *
         short_lift(i, j) * short_lift(k, i);
}

int eval_loop(const std::vector<Clifford>& lifts) {
  Clifford p = Clifford::scalar(1);
  for (const Clifford& c : lifts) p = p * c;
  if (!p.is_scalar())
    throw PinError("eval_loop: product is not scalar: " + p.str());
  long long s = p.scalar_part();
  if (s == 0) throw PinError("eval_loop: product vanished");
  return s < 0 ? 1 : 0;
}

}  // namespace gridsq::pin
