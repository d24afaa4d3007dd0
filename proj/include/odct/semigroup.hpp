#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "odct/chain_map.hpp"

namespace odct {

  /// A finite semigroup of chain maps of a common degree.
  ///
  /// Elements are deduplicated and held in lexicographic order, so an index
  /// identifies an element reproducibly. The monoid S^1 is handled virtually:
  /// the index one() == size() stands for an adjoined identity and is never
  /// stored as an element, even when S already contains the identity map.
  class FiniteSemigroup {
   public:
    using index_type = std::size_t;

    /// Throws invalid_input if elems is empty, mixes degrees or is not closed
    /// under composition.
    static FiniteSemigroup from_elements(std::vector<ChainMap> elems);

    std::size_t size() const noexcept {
      return elements_.size();
    }

    int degree() const noexcept {
      return elements_.front().degree();
    }

    ChainMap const& at(index_type i) const {
      return elements_.at(i);
    }

    std::span<ChainMap const> elements() const noexcept {
      return elements_;
    }

    /// Index of the adjoined identity of S^1.
    index_type one() const noexcept {
      return elements_.size();
    }

    /// Number of indices of S^1, i.e. size() + 1.
    std::size_t monoid_size() const noexcept {
      return elements_.size() + 1;
    }

    std::optional<index_type> index_of(ChainMap const& a) const;

    bool contains(ChainMap const& a) const {
      return index_of(a).has_value();
    }

    bool contains_identity() const {
      return contains(ChainMap::identity(degree()));
    }

    /// Product in S^1; either argument may be one().
    index_type product(index_type i, index_type j) const;

    /// The chain map behind an S^1 index (the identity map for one()).
    ChainMap element_or_identity(index_type i) const;

   private:
    FiniteSemigroup() = default;

    struct Table;

    std::vector<ChainMap>                     elements_;
    std::map<ChainMap, index_type>            lookup_;
    std::shared_ptr<Table>                    table_;
  };

  /// Least subsemigroup containing the generators. Throws invalid_input for
  /// an empty or mixed-degree generator list.
  FiniteSemigroup closure(std::vector<ChainMap> const& generators);

  /// A partition of the index range [0, size) of a FiniteSemigroup.
  ///
  /// The id of a class is its smallest member index; classes() is ordered by
  /// id and each class is ascending.
  class EquivPartition {
   public:
    EquivPartition() = default;

    /// Elements i and j share a class iff keys[i] == keys[j].
    template <typename Key>
    static EquivPartition by_key(std::vector<Key> const& keys) {
      std::map<Key, std::size_t> first;
      std::vector<std::size_t>   labels(keys.size());
      for (std::size_t i = 0; i < keys.size(); ++i) {
        labels[i] = first.try_emplace(keys[i], i).first->second;
      }
      return EquivPartition(std::move(labels));
    }

    static EquivPartition discrete(std::size_t size);

    /// Finest partition coarser than both.
    static EquivPartition join(EquivPartition const& a,
                               EquivPartition const& b);
    static EquivPartition meet(EquivPartition const& a,
                               EquivPartition const& b);

    std::size_t size() const noexcept {
      return class_of_.size();
    }

    std::size_t class_of(std::size_t i) const {
      return class_of_.at(i);
    }

    std::vector<std::vector<std::size_t>> const& classes() const noexcept {
      return classes_;
    }

    std::vector<std::size_t> const& class_containing(std::size_t i) const;

    bool related(std::size_t i, std::size_t j) const {
      return class_of(i) == class_of(j);
    }

    bool is_discrete() const noexcept {
      return classes_.size() == class_of_.size();
    }

    /// Every class of *this lies inside a class of coarser.
    bool refines(EquivPartition const& coarser) const;

    friend bool operator==(EquivPartition const& a, EquivPartition const& b) {
      return a.class_of_ == b.class_of_;
    }

   private:
    // labels[i] must be an index whose label is itself (a representative).
    explicit EquivPartition(std::vector<std::size_t> labels);

    std::vector<std::size_t>              class_of_;
    std::vector<std::vector<std::size_t>> classes_;
  };

  struct GreensPartitions {
    EquivPartition L;
    EquivPartition R;
    EquivPartition H;
    EquivPartition D;
    EquivPartition J;
  };

  /// Principal ideals S^1 a, a S^1 and S^1 a S^1 as membership masks.
  std::vector<bool> principal_left_ideal(FiniteSemigroup const& S,
                                         std::size_t            a);
  std::vector<bool> principal_right_ideal(FiniteSemigroup const& S,
                                          std::size_t            a);
  std::vector<bool> principal_two_sided_ideal(FiniteSemigroup const& S,
                                              std::size_t            a);

  GreensPartitions greens_partitions(FiniteSemigroup const& S);

  bool is_j_trivial(FiniteSemigroup const& S);

  std::vector<std::size_t> idempotents(FiniteSemigroup const& S);

  /// Indices a with a = a g a for some g in S.
  std::vector<std::size_t> regular_elements(FiniteSemigroup const& S);

  /// Closed under composition, commutative and made of idempotents.
  bool is_semilattice(std::span<ChainMap const> elements);

}  // namespace odct
