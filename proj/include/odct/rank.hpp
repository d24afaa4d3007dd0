#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "odct/chain_map.hpp"
#include "odct/semigroup.hpp"

namespace odct {

  /// Elements of S grouped by rank (image size).
  struct RankLadder {
    std::map<int, std::vector<std::size_t>> by_rank;  // p -> G_p
    std::map<int, std::vector<std::size_t>> ideals;   // p -> K_p = G_1..G_p
  };

  RankLadder rank_ladder(FiniteSemigroup const& S);

  /// Whether S^1 X S^1 lies inside X.
  bool is_two_sided_ideal(FiniteSemigroup const&      S,
                          std::span<std::size_t const> subset);

  /// Collapses {i, i+1} onto i and shifts i+2, ..., n down by one.
  ChainMap tau(int n, int i);

  struct LiftDecomposition {
    ChainMap split;     // rank p + 1, one block of a cut in two
    ChainMap collapse;  // rank p + 1, glues the cut back together
  };

  /// For a in ODCT_n of rank p <= n - 2, two maps of rank p + 1 whose product
  /// (split first) is a. The last block with at least two points loses its
  /// maximum to a fresh block; when the last block of a is that block this is
  /// the textbook split A_p = A'_p u {max A_p}. Throws invalid_input if a is
  /// outside ODCT_n or has rank above n - 2.
  LiftDecomposition lift_decomposition(ChainMap const& a);

  /// A word over the rank-(n-1) elements of ODCT_n multiplying to a, found by
  /// lifting repeatedly. a must lie in ODCT_n with rank <= n - 1.
  std::vector<ChainMap> factor_over_top_rank(ChainMap const& a);

  /// Whether the elements at the given indices generate all of S.
  bool generates(FiniteSemigroup const& S, std::span<std::size_t const> gens);

  /// Elements s of S with s outside <S \ {s}>.
  std::vector<std::size_t> irreducible_elements(FiniteSemigroup const& S);

  struct GenSetCertificate {
    std::vector<ChainMap> generators;
    std::size_t           target_size;
    bool                  is_generating;
    bool                  is_minimal;
    /// Known only for J-trivial targets.
    std::optional<bool>   is_unique_minimum;
    std::string           method;  // "irreducibles" or "subset-search"
  };

  inline constexpr std::size_t max_subset_search_size = 64;
  inline constexpr std::size_t max_subset_search_rank = 8;
  inline constexpr std::size_t max_exhaustive_size    = 20;

  /// rank(S) with a certificate. J-trivial S: the irreducible elements.
  /// Otherwise, for |S| <= 64: the lexicographically least generating set of
  /// least size <= 8 containing the irreducibles. Throws capacity_error
  /// beyond those limits.
  GenSetCertificate rank_exact(FiniteSemigroup const& S);

  /// Every inclusion-minimal generating set of S by full subset enumeration.
  /// Throws capacity_error if |S| > max_exhaustive_size.
  std::vector<std::vector<std::size_t>>
  minimal_generating_sets_exhaustive(FiniteSemigroup const& S);

}  // namespace odct
