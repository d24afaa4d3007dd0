#include "odct/natural_order.hpp"

#include <algorithm>
#include <string>

#include "odct/error.hpp"

namespace odct {

  bool validates(OrderWitness const& w, ChainMap const& a, ChainMap const& b) {
    int const n = a.degree();
    if (b.degree() != n || w.lambda.degree() != n || w.mu.degree() != n) {
      return false;
    }
    ChainMap const lambda
        = w.uses_identity_lambda ? ChainMap::identity(n) : w.lambda;
    ChainMap const mu = w.uses_identity_mu ? ChainMap::identity(n) : w.mu;
    return a == lambda * b && a == b * mu && a == a * mu;
  }

  std::optional<OrderWitness> leq_definitional(ChainMap const&        a,
                                               ChainMap const&        b,
                                               FiniteSemigroup const& S) {
    if (a.degree() != S.degree() || b.degree() != S.degree()) {
      throw invalid_input("leq_definitional: degree mismatch");
    }
    auto const id = ChainMap::identity(a.degree());

    if (a == b) {
      return OrderWitness{id, id, true, true};
    }
    // The adjoined identity only works when a == b, handled above.
    std::optional<ChainMap> lambda;
    for (auto const& l : S.elements()) {
      if (l * b == a) {
        lambda = l;
        break;
      }
    }
    if (!lambda) {
      return std::nullopt;
    }
    for (auto const& m : S.elements()) {
      if (b * m == a && a * m == a) {
        return OrderWitness{*lambda, m, false, false};
      }
    }
    return std::nullopt;
  }

  RelationSets relation_sets(ChainMap const& a, ChainMap const& b) {
    if (a.degree() != b.degree()) {
      throw invalid_input("relation_sets: degree mismatch");
    }
    RelationSets out;
    int const    n = a.degree();
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) {
        if (b(x) == a(y)) {
          out.ab_inv.emplace(x, y);
        }
        if (a(x) == a(y)) {
          out.aa_inv.emplace(x, y);
        }
      }
    }
    return out;
  }

  bool leq_pn_criterion(ChainMap const& a, ChainMap const& b) {
    if (a.degree() != b.degree()) {
      throw invalid_input("leq_pn_criterion: degree mismatch");
    }
    auto const ia = a.image_set();
    auto const ib = b.image_set();
    if (!std::includes(ib.begin(), ib.end(), ia.begin(), ia.end())) {
      return false;
    }
    auto const [ab_inv, aa_inv] = relation_sets(a, b);
    if (!std::includes(aa_inv.begin(), aa_inv.end(), ab_inv.begin(),
                       ab_inv.end())) {
      return false;
    }
    // b b^-1 restricted to dom b x dom a; both domains are all of [n].
    auto const bb_inv = relation_sets(b, b).aa_inv;
    return std::includes(aa_inv.begin(), aa_inv.end(), bb_inv.begin(),
                         bb_inv.end());
  }

  std::string_view to_string(OrderClause c) noexcept {
    switch (c) {
      case OrderClause::image_point:
        return "image-point";
      case OrderClause::image_containment:
        return "image-containment";
      case OrderClause::middle_preimages:
        return "middle-preimages";
      case OrderClause::boundary_blocks:
        return "boundary-blocks";
    }
    return "?";
  }

  std::string_view to_string(InteriorReading r) noexcept {
    return r == InteriorReading::for_all ? "forall" : "forsome";
  }

  InteriorReading parse_interior_reading(std::string_view text) {
    if (text == "forall") {
      return InteriorReading::for_all;
    }
    if (text == "forsome") {
      return InteriorReading::for_some;
    }
    throw invalid_input("unknown reading '" + std::string(text)
                        + "' (expected forall or forsome)");
  }

  namespace {
    bool boundary_ok(BlockForm const& bf, ChainMap const& b) {
      return b(bf.blocks.front().back()) == bf.values.front()
             && b(bf.blocks.back().front()) == bf.values.back();
    }

    // For each interior block i (0-based 1..p-2), whether
    // values[i] b^-1 == A_i.
    std::vector<bool> interior_matches(BlockForm const& bf,
                                       ChainMap const&  b) {
      std::vector<bool> out;
      for (std::size_t i = 1; i + 1 < bf.blocks.size(); ++i) {
        out.push_back(b.preimage(bf.values[i]) == bf.blocks[i]);
      }
      return out;
    }

    OrderVerdict verdict(std::vector<OrderClause> failing) {
      return {failing.empty(), std::move(failing)};
    }
  }  // namespace

  OrderVerdict leq_oct_verdict(ChainMap const& a, ChainMap const& b) {
    if (a.degree() != b.degree() || !belongs_to(a, Family::OCT)
        || !belongs_to(b, Family::OCT)) {
      throw scope_error("leq_oct_theorem: theorem scope is OCT ("
                        + to_string(a) + ", " + to_string(b) + ")");
    }
    auto const               bf = to_block_form(a);
    auto const               ib = b.image_set();
    std::vector<OrderClause> failing;
    if (bf.blocks.size() == 1) {
      if (!std::binary_search(ib.begin(), ib.end(), bf.values.front())) {
        failing.push_back(OrderClause::image_point);
      }
      return verdict(std::move(failing));
    }
    auto const ia = a.image_set();
    if (!std::includes(ib.begin(), ib.end(), ia.begin(), ia.end())) {
      failing.push_back(OrderClause::image_containment);
    }
    if (bf.blocks.size() >= 3) {
      auto const m = interior_matches(bf, b);
      if (!std::all_of(m.begin(), m.end(), [](bool x) { return x; })) {
        failing.push_back(OrderClause::middle_preimages);
      }
    }
    if (!boundary_ok(bf, b)) {
      failing.push_back(OrderClause::boundary_blocks);
    }
    return verdict(std::move(failing));
  }

  bool leq_oct_theorem(ChainMap const& a, ChainMap const& b) {
    return leq_oct_verdict(a, b).holds;
  }

  OrderVerdict leq_odct_verdict(ChainMap const& a, ChainMap const& b,
                                InteriorReading reading) {
    if (a.degree() != b.degree() || !belongs_to(a, Family::ODCT)
        || !belongs_to(b, Family::ODCT)) {
      throw scope_error("leq_odct_theorem: theorem scope is ODCT ("
                        + to_string(a) + ", " + to_string(b) + ")");
    }
    auto const               bf = to_block_form(a);
    std::vector<OrderClause> failing;
    if (bf.blocks.size() == 1) {
      return verdict(std::move(failing));
    }
    if (bf.blocks.size() >= 3) {
      auto const m  = interior_matches(bf, b);
      auto const ok = [](bool x) { return x; };
      bool const holds = reading == InteriorReading::for_all
                             ? std::all_of(m.begin(), m.end(), ok)
                             : std::any_of(m.begin(), m.end(), ok);
      if (!holds) {
        failing.push_back(OrderClause::middle_preimages);
      }
    }
    if (!boundary_ok(bf, b)) {
      failing.push_back(OrderClause::boundary_blocks);
    }
    return verdict(std::move(failing));
  }

  bool leq_odct_theorem(ChainMap const& a, ChainMap const& b,
                        InteriorReading reading) {
    return leq_odct_verdict(a, b, reading).holds;
  }

  OrderWitness construct_witnesses(ChainMap const& a, ChainMap const& b) {
    if (!leq_oct_theorem(a, b)) {
      throw invalid_input("construct_witnesses: " + to_string(a)
                          + " <= " + to_string(b)
                          + " fails the OCT_n criterion");
    }
    int const  n  = a.degree();
    auto const bf = to_block_form(a);
    if (bf.blocks.size() == 1) {
      int const y = b.preimage(bf.values.front()).front();
      return OrderWitness{ChainMap::constant(n, y), a, false, false};
    }
    auto const& first = bf.blocks.front();
    auto const& last  = bf.blocks.back();
    int const   lo    = bf.values.front();
    int const   hi    = bf.values.back();

    std::vector<int> lambda(static_cast<std::size_t>(n));
    std::vector<int> mu(static_cast<std::size_t>(n));
    for (int y = 1; y <= n; ++y) {
      int& l = lambda[static_cast<std::size_t>(y - 1)];
      if (y <= first.back()) {
        l = first.back();
      } else if (y >= last.front()) {
        l = last.front();
      } else {
        l = y;
      }
      mu[static_cast<std::size_t>(y - 1)] = std::clamp(y, lo, hi);
    }
    return OrderWitness{ChainMap(std::move(lambda)), ChainMap(std::move(mu)),
                        false, false};
  }

  std::vector<std::pair<std::size_t, std::size_t>>
  order_table(FiniteSemigroup const& S, std::size_t cap) {
    if (S.size() > cap) {
      throw capacity_error("order_table: |S| = " + std::to_string(S.size())
                           + " exceeds the cap of " + std::to_string(cap));
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t const                                m = S.size();
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (a == b) {
          out.emplace_back(a, b);
          continue;
        }
        bool left = false;
        for (std::size_t l = 0; l < m && !left; ++l) {
          left = S.product(l, b) == a;
        }
        if (!left) {
          continue;
        }
        for (std::size_t mu = 0; mu < m; ++mu) {
          if (S.product(b, mu) == a && S.product(a, mu) == a) {
            out.emplace_back(a, b);
            break;
          }
        }
      }
    }
    return out;
  }

  bool is_partial_order(
      std::vector<std::pair<std::size_t, std::size_t>> const& pairs,
      std::size_t                                             size) {
    std::vector<std::vector<bool>> rel(size, std::vector<bool>(size, false));
    for (auto [x, y] : pairs) {
      if (x >= size || y >= size) {
        return false;
      }
      rel[x][y] = true;
    }
    for (std::size_t x = 0; x < size; ++x) {
      if (!rel[x][x]) {
        return false;
      }
      for (std::size_t y = 0; y < size; ++y) {
        if (x != y && rel[x][y] && rel[y][x]) {
          return false;
        }
        if (!rel[x][y]) {
          continue;
        }
        for (std::size_t z = 0; z < size; ++z) {
          if (rel[y][z] && !rel[x][z]) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace odct
