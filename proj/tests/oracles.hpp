#pragma once

// Test-side oracles, kept independent of the library's decision procedures.

#include <optional>
#include <vector>

#include "omegacat/cells.hpp"

namespace oracles {

using omegacat::CategoryPresentation;
using omegacat::CellId;
using omegacat::VirtualCell;

// Direct unfolding of the coinductive equivalence definition: search all
// opposed arrow pairs and recurse on the composite conditions. No
// memoization, no minimality bookkeeping.
inline bool brute_equiv(const CategoryPresentation& P, VirtualCell x, VirtualCell y) {
  x = P.normalize(x);
  y = P.normalize(y);
  if (P.vdegree(x) != P.vdegree(y)) return false;
  const int deg = P.vdegree(x);
  if (deg >= P.truncation) return x == y;
  for (const auto& [fid, frec] : P.cells) {
    if (frec.degree != deg + 1 || *frec.dom != x.cell || *frec.cod != y.cell) continue;
    for (const auto& [gid, grec] : P.cells) {
      if (grec.degree != deg + 1 || *grec.dom != y.cell || *grec.cod != x.cell) continue;
      auto gf = P.try_compose(1, {gid, 0}, {fid, 0});
      auto fg = P.try_compose(1, {fid, 0}, {gid, 0});
      if (!gf || !fg) continue;
      if (brute_equiv(P, *gf, P.videntity(x)) && brute_equiv(P, *fg, P.videntity(y)))
        return true;
    }
  }
  return false;
}

}  // namespace oracles
