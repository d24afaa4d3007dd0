#include "odct/semigroup.hpp"

#include <cstdint>
#include <deque>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_set>

#include "odct/error.hpp"

namespace odct {

  namespace {
    // Dense tables above this many elements would cost more than 16 MiB.
    constexpr std::size_t max_table_elements = 2048;

    void check_degrees(std::vector<ChainMap> const& elems, char const* who) {
      if (elems.empty()) {
        throw invalid_input(std::string(who) + ": empty element list");
      }
      for (auto const& a : elems) {
        if (a.degree() != elems.front().degree()) {
          throw invalid_input(std::string(who) + ": mixed degrees");
        }
      }
    }
  }  // namespace

  struct FiniteSemigroup::Table {
    std::once_flag             once;
    std::vector<std::uint32_t> products;  // row-major, size() x size()
  };

  FiniteSemigroup FiniteSemigroup::from_elements(std::vector<ChainMap> elems) {
    check_degrees(elems, "FiniteSemigroup::from_elements");
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

    FiniteSemigroup S;
    S.elements_ = std::move(elems);
    for (index_type i = 0; i < S.elements_.size(); ++i) {
      S.lookup_.emplace(S.elements_[i], i);
    }
    S.table_ = std::make_shared<Table>();
    for (auto const& a : S.elements_) {
      for (auto const& b : S.elements_) {
        auto ab = a * b;
        if (!S.lookup_.contains(ab)) {
          throw invalid_input("FiniteSemigroup::from_elements: not closed, "
                              + to_string(a) + " * " + to_string(b) + " = "
                              + to_string(ab) + " is missing");
        }
      }
    }
    return S;
  }

  std::optional<FiniteSemigroup::index_type>
  FiniteSemigroup::index_of(ChainMap const& a) const {
    if (auto it = lookup_.find(a); it != lookup_.end()) {
      return it->second;
    }
    return std::nullopt;
  }

  FiniteSemigroup::index_type FiniteSemigroup::product(index_type i,
                                                       index_type j) const {
    if (i == one()) {
      return j;
    }
    if (j == one()) {
      return i;
    }
    std::size_t const n = size();
    if (n <= max_table_elements) {
      std::call_once(table_->once, [this, n] {
        table_->products.resize(n * n);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            table_->products[a * n + b] = static_cast<std::uint32_t>(
                lookup_.at(elements_[a] * elements_[b]));
          }
        }
      });
      return table_->products[i * n + j];
    }
    return lookup_.at(elements_.at(i) * elements_.at(j));
  }

  ChainMap FiniteSemigroup::element_or_identity(index_type i) const {
    return i == one() ? ChainMap::identity(degree()) : elements_.at(i);
  }

  FiniteSemigroup closure(std::vector<ChainMap> const& generators) {
    check_degrees(generators, "closure");
    std::unordered_set<ChainMap, ChainMapHash> seen(generators.begin(),
                                                    generators.end());
    std::deque<ChainMap> frontier(seen.begin(), seen.end());
    // Right multiplication by generators reaches every finite product.
    while (!frontier.empty()) {
      ChainMap x = std::move(frontier.front());
      frontier.pop_front();
      for (auto const& g : generators) {
        auto xg = x * g;
        if (seen.insert(xg).second) {
          frontier.push_back(std::move(xg));
        }
      }
    }
    return FiniteSemigroup::from_elements(
        std::vector<ChainMap>(seen.begin(), seen.end()));
  }

  ////////////////////////////////////////////////////////////////////////
  // EquivPartition
  ////////////////////////////////////////////////////////////////////////

  EquivPartition::EquivPartition(std::vector<std::size_t> labels) {
    // Relabel so that each class is named by its smallest member.
    std::map<std::size_t, std::size_t> smallest;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      smallest.try_emplace(labels[i], i);
    }
    class_of_.resize(labels.size());
    std::map<std::size_t, std::size_t> slot;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      std::size_t const id = smallest.at(labels[i]);
      class_of_[i]         = id;
      auto [it, fresh]     = slot.try_emplace(id, classes_.size());
      if (fresh) {
        classes_.emplace_back();
      }
      classes_[it->second].push_back(i);
    }
  }

  EquivPartition EquivPartition::discrete(std::size_t size) {
    std::vector<std::size_t> labels(size);
    std::iota(labels.begin(), labels.end(), 0);
    return EquivPartition(std::move(labels));
  }

  EquivPartition EquivPartition::join(EquivPartition const& a,
                                      EquivPartition const& b) {
    if (a.size() != b.size()) {
      throw invalid_input("EquivPartition::join: size mismatch");
    }
    std::vector<std::size_t> parent(a.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    auto unite = [&](std::size_t x, std::size_t y) {
      x = find(x);
      y = find(y);
      if (x != y) {
        parent[std::max(x, y)] = std::min(x, y);
      }
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
      unite(i, a.class_of(i));
      unite(i, b.class_of(i));
    }
    std::vector<std::size_t> labels(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      labels[i] = find(i);
    }
    return EquivPartition(std::move(labels));
  }

  EquivPartition EquivPartition::meet(EquivPartition const& a,
                                      EquivPartition const& b) {
    if (a.size() != b.size()) {
      throw invalid_input("EquivPartition::meet: size mismatch");
    }
    std::vector<std::pair<std::size_t, std::size_t>> keys(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      keys[i] = {a.class_of(i), b.class_of(i)};
    }
    return by_key(keys);
  }

  std::vector<std::size_t> const&
  EquivPartition::class_containing(std::size_t i) const {
    auto const id = class_of(i);
    auto it = std::find_if(classes_.begin(), classes_.end(),
                           [id](auto const& c) { return c.front() == id; });
    return *it;
  }

  bool EquivPartition::refines(EquivPartition const& coarser) const {
    if (size() != coarser.size()) {
      return false;
    }
    for (auto const& c : classes_) {
      for (std::size_t i : c) {
        if (!coarser.related(i, c.front())) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  std::vector<bool> principal_left_ideal(FiniteSemigroup const& S,
                                         std::size_t            a) {
    std::vector<bool> mask(S.size(), false);
    for (std::size_t s = 0; s < S.monoid_size(); ++s) {
      mask[S.product(s, a)] = true;
    }
    return mask;
  }

  std::vector<bool> principal_right_ideal(FiniteSemigroup const& S,
                                          std::size_t            a) {
    std::vector<bool> mask(S.size(), false);
    for (std::size_t s = 0; s < S.monoid_size(); ++s) {
      mask[S.product(a, s)] = true;
    }
    return mask;
  }

  std::vector<bool> principal_two_sided_ideal(FiniteSemigroup const& S,
                                              std::size_t            a) {
    auto const        right = principal_right_ideal(S, a);
    std::vector<bool> mask(S.size(), false);
    for (std::size_t r = 0; r < S.size(); ++r) {
      if (!right[r]) {
        continue;
      }
      for (std::size_t s = 0; s < S.monoid_size(); ++s) {
        mask[S.product(s, r)] = true;
      }
    }
    return mask;
  }

  GreensPartitions greens_partitions(FiniteSemigroup const& S) {
    std::vector<std::vector<bool>> left, right, two_sided;
    for (std::size_t a = 0; a < S.size(); ++a) {
      left.push_back(principal_left_ideal(S, a));
      right.push_back(principal_right_ideal(S, a));
      two_sided.push_back(principal_two_sided_ideal(S, a));
    }
    auto L = EquivPartition::by_key(left);
    auto R = EquivPartition::by_key(right);
    auto H = EquivPartition::meet(L, R);
    auto D = EquivPartition::join(L, R);
    auto J = EquivPartition::by_key(two_sided);
    return {std::move(L), std::move(R), std::move(H), std::move(D),
            std::move(J)};
  }

  bool is_j_trivial(FiniteSemigroup const& S) {
    std::vector<std::vector<bool>> two_sided;
    for (std::size_t a = 0; a < S.size(); ++a) {
      two_sided.push_back(principal_two_sided_ideal(S, a));
    }
    return EquivPartition::by_key(two_sided).is_discrete();
  }

  std::vector<std::size_t> idempotents(FiniteSemigroup const& S) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < S.size(); ++a) {
      if (S.product(a, a) == a) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<std::size_t> regular_elements(FiniteSemigroup const& S) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < S.size(); ++a) {
      for (std::size_t g = 0; g < S.size(); ++g) {
        if (S.product(S.product(a, g), a) == a) {
          out.push_back(a);
          break;
        }
      }
    }
    return out;
  }

  bool is_semilattice(std::span<ChainMap const> elements) {
    std::unordered_set<ChainMap, ChainMapHash> members(elements.begin(),
                                                       elements.end());
    for (auto const& e : elements) {
      if (!is_idempotent(e)) {
        return false;
      }
      for (auto const& f : elements) {
        auto ef = e * f;
        if (ef != f * e || !members.contains(ef)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace odct
