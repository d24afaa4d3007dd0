#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace odct {

  /// A full transformation of the chain [n] = {1, ..., n}.
  ///
  /// Stored as its image sequence: entry i - 1 holds the image of the point
  /// i. Points and images are 1-based everywhere in the public interface.
  class ChainMap {
   public:
    /// Throws invalid_input unless every entry lies in [1, images.size()]
    /// and the sequence is nonempty.
    explicit ChainMap(std::vector<int> images);

    static ChainMap identity(int n);
    static ChainMap constant(int n, int value);

    int degree() const noexcept {
      return static_cast<int>(images_.size());
    }

    /// Image of the point x, 1 <= x <= degree().
    int operator()(int x) const noexcept {
      return images_[static_cast<std::size_t>(x - 1)];
    }

    std::span<int const> images() const noexcept {
      return images_;
    }

    /// Im of the map, ascending.
    std::vector<int> image_set() const;

    /// |Im|.
    int rank() const;

    bool is_identity() const noexcept;

    /// All points x with x mapped to y, ascending.
    std::vector<int> preimage(int y) const;

    friend bool operator==(ChainMap const&, ChainMap const&) = default;
    // Lexicographic on the image sequence; shorter chains first.
    friend std::strong_ordering operator<=>(ChainMap const& a,
                                            ChainMap const& b) {
      if (auto c = a.images_.size() <=> b.images_.size(); c != 0) {
        return c;
      }
      return a.images_ <=> b.images_;
    }

   private:
    std::vector<int> images_;
  };

  struct ChainMapHash {
    std::size_t operator()(ChainMap const& a) const noexcept;
  };

  /// x(a b) = ((x)a)b: apply a first, then b.
  ChainMap compose(ChainMap const& a, ChainMap const& b);

  inline ChainMap operator*(ChainMap const& a, ChainMap const& b) {
    return compose(a, b);
  }

  bool is_order_preserving(ChainMap const& a);
  bool is_order_reversing(ChainMap const& a);
  bool is_order_decreasing(ChainMap const& a);
  bool is_contraction(ChainMap const& a);
  bool is_isometry(ChainMap const& a);
  bool is_idempotent(ChainMap const& a);

  enum class Family { T, CT, OCT, ORCT, ODCT };

  std::string_view to_string(Family f) noexcept;
  /// Accepts "T", "CT", "OCT", "ORCT", "ODCT".
  Family parse_family(std::string_view text);

  bool belongs_to(ChainMap const& a, Family f);

  /// Every family containing a, listed in the order T, CT, ORCT, OCT, ODCT.
  std::vector<Family> membership(ChainMap const& a);

  /// Kernel classes A_1, ..., A_p of a map together with their images.
  ///
  /// A valid BlockForm has nonempty ascending blocks partitioning [n], listed
  /// by increasing minimum, and pairwise distinct values in [1, n]; block i is
  /// sent to values[i]. For order-preserving maps the blocks are intervals and
  /// the values are increasing.
  struct BlockForm {
    std::vector<std::vector<int>> blocks;
    std::vector<int>              values;

    int degree() const noexcept;
    friend bool operator==(BlockForm const&, BlockForm const&) = default;
  };

  BlockForm to_block_form(ChainMap const& a);
  /// Throws invalid_input if bf is not a valid BlockForm.
  ChainMap from_block_form(BlockForm const& bf);

  /// The gap condition relating consecutive blocks of an order-preserving
  /// block form: blocks are intervals with A_1 < ... < A_p, values increase,
  /// and values[i] - values[i-1] <= min A_i - max A_{i-1} for every i >= 2.
  /// Holds exactly for the order-preserving contractions.
  bool satisfies_block_gap_condition(BlockForm const& bf);

  struct Transversal {
    std::vector<int> points;
  };

  struct TransversalCheck {
    bool is_transversal;
    bool is_convex;
    bool is_admissible;
  };

  /// is_admissible requires is_transversal and that the map sending each
  /// block to its transversal point is a contraction.
  TransversalCheck transversal_checks(BlockForm const& bf, Transversal const& t);

  /// "n=K;[i1,i2,...,iK]"
  std::string to_string(ChainMap const& a);
  ChainMap    parse_chain_map(std::string_view text);

  /// "{1,2,3|4,5|6}->[1,2,3]"
  std::string to_string(BlockForm const& bf);
  BlockForm   parse_block_form(std::string_view text);

  std::ostream& operator<<(std::ostream& os, ChainMap const& a);
  std::ostream& operator<<(std::ostream& os, BlockForm const& bf);

}  // namespace odct
