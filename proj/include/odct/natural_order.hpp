#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "odct/chain_map.hpp"
#include "odct/semigroup.hpp"

namespace odct {

  /// Factors certifying a <= b: a = lambda b, a = b mu and a = a mu.
  ///
  /// A set flag means the factor is the identity adjoined in S^1; the
  /// corresponding map then holds the identity of the chain.
  struct OrderWitness {
    ChainMap lambda;
    ChainMap mu;
    bool     uses_identity_lambda = false;
    bool     uses_identity_mu     = false;
  };

  /// Checks the three defining equations.
  bool validates(OrderWitness const& w, ChainMap const& a, ChainMap const& b);

  /// Searches S^1 for a witness of a <= b. lambda and mu are chosen
  /// independently: the adjoined identity is tried first, then the elements
  /// of S in lexicographic order.
  std::optional<OrderWitness> leq_definitional(ChainMap const&        a,
                                               ChainMap const&        b,
                                               FiniteSemigroup const& S);

  using RelationSet = std::set<std::pair<int, int>>;

  struct RelationSets {
    RelationSet ab_inv;  // {(x, y) : x b = y a}
    RelationSet aa_inv;  // {(x, y) : x a = y a}
  };

  RelationSets relation_sets(ChainMap const& a, ChainMap const& b);

  /// The partial-map order criterion specialised to full maps:
  /// im a in im b, a b^-1 in a a^-1 and b b^-1 in a a^-1.
  bool leq_pn_criterion(ChainMap const& a, ChainMap const& b);

  /// Clauses of the closed-form order criterion on OCT_n.
  enum class OrderClause {
    image_point,        // rank 1: the image point lies in im b
    image_containment,  // im a in im b
    middle_preimages,   // (x+i) b^-1 = A_i for the interior blocks
    boundary_blocks,    // (max A_1) b = x+1 and (min A_p) b = x+p
  };

  std::string_view to_string(OrderClause c) noexcept;

  struct OrderVerdict {
    bool                     holds;
    std::vector<OrderClause> failing;  // in the order listed above
  };

  /// Closed-form a <= b on OCT_n, dispatched on rank a: rank 1 by the image
  /// point, rank 2 by image containment and the two boundary values, rank
  /// p >= 3 additionally by exact preimages of every interior value.
  /// Throws scope_error unless a, b lie in OCT_n.
  OrderVerdict leq_oct_verdict(ChainMap const& a, ChainMap const& b);
  bool         leq_oct_theorem(ChainMap const& a, ChainMap const& b);

  /// How the interior-preimage clause of the ODCT_n criterion quantifies
  /// over i in {2, ..., p-1}.
  enum class InteriorReading { for_all, for_some };

  std::string_view to_string(InteriorReading r) noexcept;
  InteriorReading  parse_interior_reading(std::string_view text);

  /// Closed-form a <= b on ODCT_n: the constant map is below everything;
  /// rank 2 needs (max A_1) b = 1 and (min A_2) b = 2; rank p >= 3 needs
  /// (max A_1) b = 1, (min A_p) b = p and i b^-1 = A_i for the interior
  /// blocks under the chosen reading. Throws scope_error outside ODCT_n.
  OrderVerdict leq_odct_verdict(ChainMap const& a, ChainMap const& b,
                                InteriorReading reading
                                = InteriorReading::for_all);
  bool         leq_odct_theorem(ChainMap const& a, ChainMap const& b,
                                InteriorReading reading
                                = InteriorReading::for_all);

  /// Explicit witnesses for a pair satisfying the OCT_n criterion.
  ///
  /// Rank >= 2: lambda sends A_1 to max A_1, fixes the interior blocks and
  /// sends A_p to min A_p; mu clamps [n] onto [x+1, x+p]. Rank 1: lambda is
  /// constant at the least preimage of the image point and mu = a.
  /// Throws invalid_input if the criterion fails.
  OrderWitness construct_witnesses(ChainMap const& a, ChainMap const& b);

  inline constexpr std::size_t default_order_table_cap = 4096;

  /// All index pairs (i, j) with S[i] <= S[j], ascending.
  std::vector<std::pair<std::size_t, std::size_t>>
  order_table(FiniteSemigroup const& S,
              std::size_t            cap = default_order_table_cap);

  /// Reflexive, antisymmetric and transitive on [0, size).
  bool is_partial_order(
      std::vector<std::pair<std::size_t, std::size_t>> const& pairs,
      std::size_t                                             size);

}  // namespace odct
