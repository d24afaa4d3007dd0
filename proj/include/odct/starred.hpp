#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "odct/chain_map.hpp"
#include "odct/semigroup.hpp"

namespace odct {

  // Largest semigroup the starred analyses accept.
  inline constexpr std::size_t max_starred_size = 512;

  /// (a, b) in L*: for all m, l in S^1, a m = a l iff b m = b l.
  /// Quantifies over every pair of S^1 directly.
  bool lstar_definitional(std::size_t a, std::size_t b,
                          FiniteSemigroup const& S);
  /// (a, b) in R*: for all m, l in S^1, m a = l a iff m b = l b.
  bool rstar_definitional(std::size_t a, std::size_t b,
                          FiniteSemigroup const& S);

  /// Kernel of s -> a s on S^1, as a label per S^1 index (labels are first
  /// occurrence positions). Two elements are L*-related iff their
  /// fingerprints are equal.
  std::vector<std::size_t> right_action_fingerprint(FiniteSemigroup const& S,
                                                    std::size_t            a);
  /// Kernel of s -> s a on S^1; equal fingerprints iff R*-related.
  std::vector<std::size_t> left_action_fingerprint(FiniteSemigroup const& S,
                                                   std::size_t            a);

  EquivPartition lstar_partition(FiniteSemigroup const& S);
  EquivPartition rstar_partition(FiniteSemigroup const& S);

  /// Closed forms on ODCT_n: L* is equality of images, R* is equality.
  /// Throw scope_error unless both maps lie in ODCT_n.
  bool lstar_theorem(ChainMap const& a, ChainMap const& b);
  bool rstar_theorem(ChainMap const& a, ChainMap const& b);

  /// Elements sharing an image set.
  EquivPartition image_partition(FiniteSemigroup const& S);

  /// J*(a): least set containing a that contains every element D*-related
  /// to l x m for each member x and l, m in S^1. Returned as a mask.
  std::vector<bool> jstar_ideal(FiniteSemigroup const& S,
                                EquivPartition const& dstar, std::size_t a);

  /// a J* b iff J*(a) = J*(b).
  EquivPartition jstar_partition(FiniteSemigroup const& S,
                                 EquivPartition const& dstar);

  struct WitnessGap {
    std::string              relation;  // "L*" or "R*"
    std::vector<std::size_t> members;
  };

  struct StarReport {
    EquivPartition          lstar;
    EquivPartition          rstar;
    EquivPartition          hstar;
    EquivPartition          dstar;
    EquivPartition          jstar;
    bool                    left_abundant;
    bool                    right_abundant;
    bool                    left_adequate;
    std::vector<WitnessGap> witness_gaps;
  };

  /// Left abundant: every L*-class holds an idempotent; right abundant: every
  /// R*-class does; left adequate: left abundant with E(S) a semilattice.
  /// Throws capacity_error above max_starred_size elements.
  StarReport abundance_report(FiniteSemigroup const& S);

}  // namespace odct
