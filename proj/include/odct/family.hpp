#pragma once

#include <vector>

#include "odct/chain_map.hpp"

namespace odct {

  struct FamilySpec {
    Family family;
    int    n;
  };

  inline constexpr int default_max_filter_n = 7;
  inline constexpr int default_max_direct_n = 20;

  /// Every map of [n]^[n] in spec.family, lexicographic on image sequences.
  /// Throws capacity_error if spec.n > max_n.
  std::vector<ChainMap> enumerate_filtered(FamilySpec spec,
                                           int max_n = default_max_filter_n);

  /// ODCT_n built from the compositions of n: each ordered interval
  /// partition A_1 < ... < A_p yields the map sending A_i to i.
  /// Lexicographic order, 2^(n-1) elements.
  std::vector<ChainMap> enumerate_odct_direct(int n,
                                              int max_n = default_max_direct_n);

  /// The idempotent of ODCT_n of rank p: fixes 1, ..., p and collapses
  /// {p, ..., n} onto p.
  ChainMap idempotent_odct(int n, int p);

  /// Whether a has the idempotent shape of ORCT_n: with lo = a + 1 and
  /// hi = a + p, the block {1..lo} goes to lo, the points strictly between
  /// lo and hi are fixed and {hi..n} goes to hi, i.e. a clamps onto
  /// [lo, hi]. Throws scope_error if a is not in ORCT_n.
  bool is_orct_idempotent_form(ChainMap const& a);

}  // namespace odct
