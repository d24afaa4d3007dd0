#include "odct/starred.hpp"

#include <deque>

#include "odct/error.hpp"

namespace odct {

  namespace {
    void check_size(FiniteSemigroup const& S, char const* who) {
      if (S.size() > max_starred_size) {
        throw capacity_error(std::string(who) + ": |S| = "
                             + std::to_string(S.size())
                             + " exceeds the starred-analysis cap of "
                             + std::to_string(max_starred_size));
      }
    }

    // Labels each S^1 index by the first index with the same product.
    template <typename Act>
    std::vector<std::size_t> kernel_labels(FiniteSemigroup const& S, Act act) {
      std::vector<std::size_t> first(S.size(), S.monoid_size());
      std::vector<std::size_t> labels(S.monoid_size());
      for (std::size_t s = 0; s < S.monoid_size(); ++s) {
        auto& f   = first[act(s)];
        f         = f == S.monoid_size() ? s : f;
        labels[s] = f;
      }
      return labels;
    }

    void check_odct(ChainMap const& a, ChainMap const& b, char const* who) {
      if (a.degree() != b.degree() || !belongs_to(a, Family::ODCT)
          || !belongs_to(b, Family::ODCT)) {
        throw scope_error(std::string(who) + ": theorem scope is ODCT ("
                          + to_string(a) + ", " + to_string(b) + ")");
      }
    }
  }  // namespace

  bool lstar_definitional(std::size_t a, std::size_t b,
                          FiniteSemigroup const& S) {
    for (std::size_t m = 0; m < S.monoid_size(); ++m) {
      for (std::size_t l = 0; l < S.monoid_size(); ++l) {
        bool const lhs = S.product(a, m) == S.product(a, l);
        bool const rhs = S.product(b, m) == S.product(b, l);
        if (lhs != rhs) {
          return false;
        }
      }
    }
    return true;
  }

  bool rstar_definitional(std::size_t a, std::size_t b,
                          FiniteSemigroup const& S) {
    for (std::size_t m = 0; m < S.monoid_size(); ++m) {
      for (std::size_t l = 0; l < S.monoid_size(); ++l) {
        bool const lhs = S.product(m, a) == S.product(l, a);
        bool const rhs = S.product(m, b) == S.product(l, b);
        if (lhs != rhs) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::size_t> right_action_fingerprint(FiniteSemigroup const& S,
                                                    std::size_t            a) {
    return kernel_labels(S, [&](std::size_t s) { return S.product(a, s); });
  }

  std::vector<std::size_t> left_action_fingerprint(FiniteSemigroup const& S,
                                                   std::size_t            a) {
    return kernel_labels(S, [&](std::size_t s) { return S.product(s, a); });
  }

  EquivPartition lstar_partition(FiniteSemigroup const& S) {
    check_size(S, "lstar_partition");
    std::vector<std::vector<std::size_t>> prints;
    for (std::size_t a = 0; a < S.size(); ++a) {
      prints.push_back(right_action_fingerprint(S, a));
    }
    return EquivPartition::by_key(prints);
  }

  EquivPartition rstar_partition(FiniteSemigroup const& S) {
    check_size(S, "rstar_partition");
    std::vector<std::vector<std::size_t>> prints;
    for (std::size_t a = 0; a < S.size(); ++a) {
      prints.push_back(left_action_fingerprint(S, a));
    }
    return EquivPartition::by_key(prints);
  }

  bool lstar_theorem(ChainMap const& a, ChainMap const& b) {
    check_odct(a, b, "lstar_theorem");
    return a.image_set() == b.image_set();
  }

  bool rstar_theorem(ChainMap const& a, ChainMap const& b) {
    check_odct(a, b, "rstar_theorem");
    return a == b;
  }

  EquivPartition image_partition(FiniteSemigroup const& S) {
    std::vector<std::vector<int>> images;
    for (auto const& a : S.elements()) {
      images.push_back(a.image_set());
    }
    return EquivPartition::by_key(images);
  }

  std::vector<bool> jstar_ideal(FiniteSemigroup const& S,
                                EquivPartition const& dstar, std::size_t a) {
    std::vector<bool>       member(S.size(), false);
    std::deque<std::size_t> work{a};
    member[a] = true;
    while (!work.empty()) {
      std::size_t const x = work.front();
      work.pop_front();
      auto const sandwiches = principal_two_sided_ideal(S, x);
      for (std::size_t y = 0; y < S.size(); ++y) {
        if (!sandwiches[y]) {
          continue;
        }
        for (std::size_t z : dstar.class_containing(y)) {
          if (!member[z]) {
            member[z] = true;
            work.push_back(z);
          }
        }
      }
    }
    return member;
  }

  EquivPartition jstar_partition(FiniteSemigroup const& S,
                                 EquivPartition const& dstar) {
    check_size(S, "jstar_partition");
    std::vector<std::vector<bool>> ideals;
    for (std::size_t a = 0; a < S.size(); ++a) {
      ideals.push_back(jstar_ideal(S, dstar, a));
    }
    return EquivPartition::by_key(ideals);
  }

  StarReport abundance_report(FiniteSemigroup const& S) {
    check_size(S, "abundance_report");
    auto lstar = lstar_partition(S);
    auto rstar = rstar_partition(S);
    auto hstar = EquivPartition::meet(lstar, rstar);
    auto dstar = EquivPartition::join(lstar, rstar);
    auto jstar = jstar_partition(S, dstar);

    auto const        idem = idempotents(S);
    std::vector<bool> is_idem(S.size(), false);
    for (auto e : idem) {
      is_idem[e] = true;
    }
    std::vector<WitnessGap> gaps;
    auto scan = [&](EquivPartition const& p, char const* name) {
      bool all = true;
      for (auto const& cls : p.classes()) {
        bool const hit = std::any_of(cls.begin(), cls.end(),
                                     [&](std::size_t i) { return is_idem[i]; });
        if (!hit) {
          all = false;
          gaps.push_back({name, cls});
        }
      }
      return all;
    };
    bool const left  = scan(lstar, "L*");
    bool const right = scan(rstar, "R*");

    std::vector<ChainMap> e_of_s;
    for (auto e : idem) {
      e_of_s.push_back(S.at(e));
    }
    bool const adequate = left && is_semilattice(e_of_s);

    return {std::move(lstar), std::move(rstar), std::move(hstar),
            std::move(dstar), std::move(jstar), left,
            right,            adequate,         std::move(gaps)};
  }

}  // namespace odct
