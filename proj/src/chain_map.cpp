#include "odct/chain_map.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

#include "odct/error.hpp"

namespace odct {

  ChainMap::ChainMap(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) {
      throw invalid_input("ChainMap: the chain must have at least one point");
    }
    int const n = degree();
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] < 1 || images_[i] > n) {
        throw invalid_input("ChainMap: image " + std::to_string(images_[i])
                            + " of point " + std::to_string(i + 1)
                            + " is outside [1, " + std::to_string(n) + "]");
      }
    }
  }

  ChainMap ChainMap::identity(int n) {
    if (n < 1) {
      throw invalid_input("ChainMap::identity: n must be positive");
    }
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return ChainMap(std::move(v));
  }

  ChainMap ChainMap::constant(int n, int value) {
    if (n < 1) {
      throw invalid_input("ChainMap::constant: n must be positive");
    }
    return ChainMap(std::vector<int>(static_cast<std::size_t>(n), value));
  }

  std::vector<int> ChainMap::image_set() const {
    std::vector<int> im(images_);
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }

  int ChainMap::rank() const {
    return static_cast<int>(image_set().size());
  }

  bool ChainMap::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != static_cast<int>(i + 1)) {
        return false;
      }
    }
    return true;
  }

  std::vector<int> ChainMap::preimage(int y) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] == y) {
        out.push_back(static_cast<int>(i + 1));
      }
    }
    return out;
  }

  std::size_t ChainMapHash::operator()(ChainMap const& a) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : a.images()) {
      h ^= static_cast<std::size_t>(v);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  ChainMap compose(ChainMap const& a, ChainMap const& b) {
    if (a.degree() != b.degree()) {
      throw invalid_input("compose: degree mismatch ("
                          + std::to_string(a.degree()) + " vs "
                          + std::to_string(b.degree()) + ")");
    }
    std::vector<int> out(static_cast<std::size_t>(a.degree()));
    for (int x = 1; x <= a.degree(); ++x) {
      out[static_cast<std::size_t>(x - 1)] = b(a(x));
    }
    return ChainMap(std::move(out));
  }

  // The predicates quantify over all pairs x < y directly.

  bool is_order_preserving(ChainMap const& a) {
    int const n = a.degree();
    for (int x = 1; x <= n; ++x) {
      for (int y = x + 1; y <= n; ++y) {
        if (a(x) > a(y)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_order_reversing(ChainMap const& a) {
    int const n = a.degree();
    for (int x = 1; x <= n; ++x) {
      for (int y = x + 1; y <= n; ++y) {
        if (a(x) < a(y)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_order_decreasing(ChainMap const& a) {
    for (int x = 1; x <= a.degree(); ++x) {
      if (a(x) > x) {
        return false;
      }
    }
    return true;
  }

  bool is_contraction(ChainMap const& a) {
    int const n = a.degree();
    for (int x = 1; x <= n; ++x) {
      for (int y = x + 1; y <= n; ++y) {
        if (std::abs(a(x) - a(y)) > y - x) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_isometry(ChainMap const& a) {
    int const n = a.degree();
    for (int x = 1; x <= n; ++x) {
      for (int y = x + 1; y <= n; ++y) {
        if (std::abs(a(x) - a(y)) != y - x) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_idempotent(ChainMap const& a) {
    for (int x = 1; x <= a.degree(); ++x) {
      if (a(a(x)) != a(x)) {
        return false;
      }
    }
    return true;
  }

  std::string_view to_string(Family f) noexcept {
    switch (f) {
      case Family::T:
        return "T";
      case Family::CT:
        return "CT";
      case Family::OCT:
        return "OCT";
      case Family::ORCT:
        return "ORCT";
      case Family::ODCT:
        return "ODCT";
    }
    return "?";
  }

  Family parse_family(std::string_view text) {
    for (Family f :
         {Family::T, Family::CT, Family::OCT, Family::ORCT, Family::ODCT}) {
      if (text == to_string(f)) {
        return f;
      }
    }
    throw invalid_input("unknown family '" + std::string(text)
                        + "' (expected T, CT, OCT, ORCT or ODCT)");
  }

  bool belongs_to(ChainMap const& a, Family f) {
    switch (f) {
      case Family::T:
        return true;
      case Family::CT:
        return is_contraction(a);
      case Family::OCT:
        return is_contraction(a) && is_order_preserving(a);
      case Family::ORCT:
        return is_contraction(a)
               && (is_order_preserving(a) || is_order_reversing(a));
      case Family::ODCT:
        return is_contraction(a) && is_order_preserving(a)
               && is_order_decreasing(a);
    }
    return false;
  }

  std::vector<Family> membership(ChainMap const& a) {
    std::vector<Family> out{Family::T};
    if (!is_contraction(a)) {
      return out;
    }
    out.push_back(Family::CT);
    bool const preserving = is_order_preserving(a);
    if (preserving || is_order_reversing(a)) {
      out.push_back(Family::ORCT);
    }
    if (preserving) {
      out.push_back(Family::OCT);
      if (is_order_decreasing(a)) {
        out.push_back(Family::ODCT);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // BlockForm
  ////////////////////////////////////////////////////////////////////////

  int BlockForm::degree() const noexcept {
    std::size_t total = 0;
    for (auto const& b : blocks) {
      total += b.size();
    }
    return static_cast<int>(total);
  }

  BlockForm to_block_form(ChainMap const& a) {
    BlockForm bf;
    // Scanning points in order lists each kernel class at its minimum.
    std::vector<int> block_of_value(static_cast<std::size_t>(a.degree()) + 1,
                                    -1);
    for (int x = 1; x <= a.degree(); ++x) {
      int& slot = block_of_value[static_cast<std::size_t>(a(x))];
      if (slot < 0) {
        slot = static_cast<int>(bf.blocks.size());
        bf.blocks.emplace_back();
        bf.values.push_back(a(x));
      }
      bf.blocks[static_cast<std::size_t>(slot)].push_back(x);
    }
    return bf;
  }

  namespace {
    void validate(BlockForm const& bf) {
      if (bf.blocks.empty()) {
        throw invalid_input("BlockForm: no blocks");
      }
      if (bf.blocks.size() != bf.values.size()) {
        throw invalid_input("BlockForm: " + std::to_string(bf.blocks.size())
                            + " blocks but " + std::to_string(bf.values.size())
                            + " values");
      }
      int const        n = bf.degree();
      std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
      int              previous_min = 0;
      for (auto const& block : bf.blocks) {
        if (block.empty()) {
          throw invalid_input("BlockForm: empty block");
        }
        if (!std::is_sorted(block.begin(), block.end())) {
          throw invalid_input("BlockForm: block points must be ascending");
        }
        if (block.front() <= previous_min) {
          throw invalid_input(
              "BlockForm: blocks must be listed by increasing minimum");
        }
        previous_min = block.front();
        for (int x : block) {
          if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]++ != 0) {
            throw invalid_input("BlockForm: blocks do not partition [1, "
                                + std::to_string(n) + "]");
          }
        }
      }
      std::vector<int> vals(bf.values);
      std::sort(vals.begin(), vals.end());
      if (std::adjacent_find(vals.begin(), vals.end()) != vals.end()) {
        throw invalid_input("BlockForm: values must be distinct");
      }
      if (vals.front() < 1 || vals.back() > n) {
        throw invalid_input("BlockForm: value outside [1, "
                            + std::to_string(n) + "]");
      }
    }
  }  // namespace

  ChainMap from_block_form(BlockForm const& bf) {
    validate(bf);
    std::vector<int> images(static_cast<std::size_t>(bf.degree()));
    for (std::size_t i = 0; i < bf.blocks.size(); ++i) {
      for (int x : bf.blocks[i]) {
        images[static_cast<std::size_t>(x - 1)] = bf.values[i];
      }
    }
    return ChainMap(std::move(images));
  }

  bool satisfies_block_gap_condition(BlockForm const& bf) {
    for (std::size_t i = 0; i < bf.blocks.size(); ++i) {
      auto const& b = bf.blocks[i];
      if (b.back() - b.front() + 1 != static_cast<int>(b.size())) {
        return false;
      }
      if (i == 0) {
        continue;
      }
      auto const& prev = bf.blocks[i - 1];
      if (prev.back() >= b.front() || bf.values[i - 1] >= bf.values[i]) {
        return false;
      }
      if (bf.values[i] - bf.values[i - 1] > b.front() - prev.back()) {
        return false;
      }
    }
    return true;
  }

  TransversalCheck transversal_checks(BlockForm const&   bf,
                                      Transversal const& t) {
    validate(bf);
    std::vector<int> pts(t.points);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    TransversalCheck out{false, false, false};
    out.is_convex = !pts.empty()
                    && pts.back() - pts.front() + 1
                           == static_cast<int>(pts.size());

    std::vector<int> chosen;
    bool             transversal = pts.size() == t.points.size()
                       && pts.size() == bf.blocks.size();
    for (auto const& block : bf.blocks) {
      if (!transversal) {
        break;
      }
      int hits = 0;
      for (int x : pts) {
        if (std::binary_search(block.begin(), block.end(), x)) {
          ++hits;
          chosen.push_back(x);
        }
      }
      transversal = hits == 1;
    }
    out.is_transversal = transversal;
    if (!transversal) {
      return out;
    }
    BlockForm induced{bf.blocks, chosen};
    out.is_admissible = is_contraction(from_block_form(induced));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text forms
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class Cursor {
     public:
      explicit Cursor(std::string_view text) : text_(text) {}

      void expect(std::string_view token) {
        if (text_.substr(pos_, token.size()) != token) {
          fail("expected '" + std::string(token) + "'");
        }
        pos_ += token.size();
      }

      bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
          ++pos_;
          return true;
        }
        return false;
      }

      int integer() {
        int         value = 0;
        char const* first = text_.data() + pos_;
        char const* last  = text_.data() + text_.size();
        if (first == last || *first < '0' || *first > '9') {
          fail("expected a decimal integer");
        }
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc()) {
          fail("integer out of range");
        }
        // Leading zeros would break bit-exact round trips.
        if (*first == '0' && ptr - first > 1) {
          fail("leading zero in integer");
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
      }

      void finish() {
        if (pos_ != text_.size()) {
          fail("trailing characters");
        }
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw invalid_input("parse error at offset " + std::to_string(pos_)
                            + " in '" + std::string(text_) + "': " + what);
      }

     private:
      std::string_view text_;
      std::size_t      pos_ = 0;
    };

    void write_list(std::ostream& os, std::span<int const> xs, char sep) {
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) {
          os << sep;
        }
        os << xs[i];
      }
    }
  }  // namespace

  std::string to_string(ChainMap const& a) {
    std::ostringstream os;
    os << a;
    return os.str();
  }

  ChainMap parse_chain_map(std::string_view text) {
    Cursor c(text);
    c.expect("n=");
    int const n = c.integer();
    c.expect(";[");
    std::vector<int> images;
    do {
      images.push_back(c.integer());
    } while (c.accept(','));
    c.expect("]");
    c.finish();
    if (n < 1 || static_cast<int>(images.size()) != n) {
      throw invalid_input("parse error in '" + std::string(text) + "': n="
                          + std::to_string(n) + " but "
                          + std::to_string(images.size()) + " images");
    }
    return ChainMap(std::move(images));
  }

  std::string to_string(BlockForm const& bf) {
    std::ostringstream os;
    os << bf;
    return os.str();
  }

  BlockForm parse_block_form(std::string_view text) {
    Cursor    c(text);
    BlockForm bf;
    c.expect("{");
    do {
      auto& block = bf.blocks.emplace_back();
      do {
        block.push_back(c.integer());
      } while (c.accept(','));
    } while (c.accept('|'));
    c.expect("}->[");
    do {
      bf.values.push_back(c.integer());
    } while (c.accept(','));
    c.expect("]");
    c.finish();
    validate(bf);
    return bf;
  }

  std::ostream& operator<<(std::ostream& os, ChainMap const& a) {
    os << "n=" << a.degree() << ";[";
    write_list(os, a.images(), ',');
    return os << ']';
  }

  std::ostream& operator<<(std::ostream& os, BlockForm const& bf) {
    os << '{';
    for (std::size_t i = 0; i < bf.blocks.size(); ++i) {
      if (i != 0) {
        os << '|';
      }
      write_list(os, bf.blocks[i], ',');
    }
    os << "}->[";
    write_list(os, bf.values, ',');
    return os << ']';
  }

}  // namespace odct
