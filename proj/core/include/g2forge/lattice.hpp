#pragma once

#include <functional>
#include <vector>

namespace g2forge {

/// Exponent vectors alpha in N^nvars with |alpha| <= degree (or == degree when
/// `homogeneous`). As evaluation points these form the principal lattice,
/// which is unisolvent for polynomials of that degree.
inline std::vector<std::vector<int>> lattice_points(int nvars, int degree, bool homogeneous = false) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(nvars, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      for (int k = homogeneous ? left : 0; k <= left; ++k) {
        cur[var] = k;
        out.push_back(cur);
      }
      cur[var] = 0;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[var] = k;
      rec(var + 1, left - k);
    }
    cur[var] = 0;
  };
  if (nvars > 0) rec(0, degree);
  return out;
}

}  // namespace g2forge
