#include "odct/rank.hpp"

#include <algorithm>
#include <deque>

#include "odct/error.hpp"

namespace odct {

  RankLadder rank_ladder(FiniteSemigroup const& S) {
    RankLadder out;
    for (std::size_t i = 0; i < S.size(); ++i) {
      out.by_rank[S.at(i).rank()].push_back(i);
    }
    std::vector<std::size_t> running;
    for (int p = 1; p <= S.degree(); ++p) {
      if (auto it = out.by_rank.find(p); it != out.by_rank.end()) {
        running.insert(running.end(), it->second.begin(), it->second.end());
        std::sort(running.begin(), running.end());
      }
      if (!running.empty()) {
        out.ideals[p] = running;
      }
    }
    return out;
  }

  bool is_two_sided_ideal(FiniteSemigroup const&      S,
                          std::span<std::size_t const> subset) {
    std::vector<bool> member(S.size(), false);
    for (auto i : subset) {
      member[i] = true;
    }
    for (auto x : subset) {
      for (std::size_t s = 0; s < S.size(); ++s) {
        if (!member[S.product(s, x)] || !member[S.product(x, s)]) {
          return false;
        }
      }
    }
    return true;
  }

  ChainMap tau(int n, int i) {
    if (n < 2 || i < 1 || i > n - 1) {
      throw invalid_input("tau: need 1 <= i <= n - 1, got n = "
                          + std::to_string(n) + ", i = " + std::to_string(i));
    }
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
      images[static_cast<std::size_t>(x - 1)] = x <= i ? x : x - 1;
    }
    return ChainMap(std::move(images));
  }

  LiftDecomposition lift_decomposition(ChainMap const& a) {
    if (!belongs_to(a, Family::ODCT)) {
      throw invalid_input("lift_decomposition: " + to_string(a)
                          + " is not in ODCT_n");
    }
    int const n = a.degree();
    int const p = a.rank();
    if (p > n - 2) {
      throw invalid_input("lift_decomposition: rank " + std::to_string(p)
                          + " exceeds n - 2 = " + std::to_string(n - 2));
    }
    auto const bf = to_block_form(a);
    // Some block has two points since p < n.
    auto k = bf.blocks.size();
    while (bf.blocks[k - 1].size() < 2) {
      --k;
    }
    int const cut_block = static_cast<int>(k);  // 1-based
    int const cut_point = bf.blocks[k - 1].back();

    std::vector<int> split(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
      int const i = a(x);  // block number, since a is in ODCT_n
      split[static_cast<std::size_t>(x - 1)]
          = i < cut_block || (i == cut_block && x != cut_point) ? i : i + 1;
    }
    // 1..k fixed, k+1..p+1 shifted down, p+2..n onto p+1.
    std::vector<int> collapse(static_cast<std::size_t>(n));
    for (int y = 1; y <= n; ++y) {
      collapse[static_cast<std::size_t>(y - 1)]
          = y <= cut_block ? y : (y <= p + 1 ? y - 1 : p + 1);
    }
    return {ChainMap(std::move(split)), ChainMap(std::move(collapse))};
  }

  std::vector<ChainMap> factor_over_top_rank(ChainMap const& a) {
    if (!belongs_to(a, Family::ODCT) || a.rank() > a.degree() - 1) {
      throw invalid_input("factor_over_top_rank: " + to_string(a)
                          + " is not a non-identity element of ODCT_n");
    }
    if (a.rank() == a.degree() - 1) {
      return {a};
    }
    auto [split, collapse] = lift_decomposition(a);
    auto word              = factor_over_top_rank(split);
    auto tail              = factor_over_top_rank(collapse);
    word.insert(word.end(), tail.begin(), tail.end());
    return word;
  }

  namespace {
    // Closure of a set of indices inside S, as a mask.
    std::vector<bool> closure_mask(FiniteSemigroup const&      S,
                                   std::span<std::size_t const> gens) {
      std::vector<bool>       member(S.size(), false);
      std::deque<std::size_t> work;
      for (auto g : gens) {
        if (!member[g]) {
          member[g] = true;
          work.push_back(g);
        }
      }
      while (!work.empty()) {
        auto const x = work.front();
        work.pop_front();
        for (auto g : gens) {
          auto const xg = S.product(x, g);
          if (!member[xg]) {
            member[xg] = true;
            work.push_back(xg);
          }
        }
      }
      return member;
    }

    bool all_set(std::vector<bool> const& mask) {
      return std::all_of(mask.begin(), mask.end(), [](bool b) { return b; });
    }

    bool is_minimal_generating(FiniteSemigroup const&       S,
                               std::vector<std::size_t> const& gens) {
      for (std::size_t drop = 0; drop < gens.size(); ++drop) {
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < gens.size(); ++j) {
          if (j != drop) {
            rest.push_back(gens[j]);
          }
        }
        if (!rest.empty() && generates(S, rest)) {
          return false;
        }
      }
      return true;
    }

    // Visits k-subsets of pool in lexicographic order until visit returns
    // true.
    template <typename Visit>
    bool for_each_combination(std::vector<std::size_t> const& pool,
                              std::size_t k, Visit&& visit) {
      if (k > pool.size()) {
        return false;
      }
      std::vector<std::size_t> pos(k);
      for (std::size_t i = 0; i < k; ++i) {
        pos[i] = i;
      }
      while (true) {
        std::vector<std::size_t> chosen;
        for (auto p : pos) {
          chosen.push_back(pool[p]);
        }
        if (visit(chosen)) {
          return true;
        }
        std::size_t i = k;
        while (i > 0 && pos[i - 1] == pool.size() - k + (i - 1)) {
          --i;
        }
        if (i == 0) {
          return false;
        }
        ++pos[i - 1];
        for (std::size_t j = i; j < k; ++j) {
          pos[j] = pos[j - 1] + 1;
        }
      }
    }
  }  // namespace

  bool generates(FiniteSemigroup const& S, std::span<std::size_t const> gens) {
    return all_set(closure_mask(S, gens));
  }

  std::vector<std::size_t> irreducible_elements(FiniteSemigroup const& S) {
    std::vector<std::size_t> out;
    std::vector<std::size_t> others;
    for (std::size_t s = 0; s < S.size(); ++s) {
      others.clear();
      for (std::size_t t = 0; t < S.size(); ++t) {
        if (t != s) {
          others.push_back(t);
        }
      }
      if (others.empty() || !closure_mask(S, others)[s]) {
        out.push_back(s);
      }
    }
    return out;
  }

  GenSetCertificate rank_exact(FiniteSemigroup const& S) {
    auto const irreducible = irreducible_elements(S);
    auto to_maps = [&S](std::vector<std::size_t> const& idx) {
      std::vector<ChainMap> maps;
      for (auto i : idx) {
        maps.push_back(S.at(i));
      }
      return maps;
    };

    if (is_j_trivial(S)) {
      return {to_maps(irreducible),        S.size(),
              generates(S, irreducible),   is_minimal_generating(S, irreducible),
              true,                        "irreducibles"};
    }
    if (S.size() > max_subset_search_size) {
      throw capacity_error(
          "rank_exact: S is not J-trivial and |S| = " + std::to_string(S.size())
          + " exceeds the subset-search limit of "
          + std::to_string(max_subset_search_size));
    }
    std::vector<std::size_t> pool;
    for (std::size_t s = 0; s < S.size(); ++s) {
      if (!std::binary_search(irreducible.begin(), irreducible.end(), s)) {
        pool.push_back(s);
      }
    }
    for (std::size_t extra = 0; irreducible.size() + extra
                                <= max_subset_search_rank;
         ++extra) {
      std::vector<std::size_t> found;
      bool const hit = for_each_combination(
          pool, extra, [&](std::vector<std::size_t> const& chosen) {
            std::vector<std::size_t> gens(irreducible);
            gens.insert(gens.end(), chosen.begin(), chosen.end());
            std::sort(gens.begin(), gens.end());
            if (!gens.empty() && generates(S, gens)) {
              found = std::move(gens);
              return true;
            }
            return false;
          });
      if (hit) {
        return {to_maps(found), S.size(), true, true, std::nullopt,
                "subset-search"};
      }
    }
    throw capacity_error("rank_exact: no generating set of size <= "
                         + std::to_string(max_subset_search_rank)
                         + " exists; rank exceeds the search limit");
  }

  std::vector<std::vector<std::size_t>>
  minimal_generating_sets_exhaustive(FiniteSemigroup const& S) {
    if (S.size() > max_exhaustive_size) {
      throw capacity_error("minimal_generating_sets_exhaustive: |S| = "
                           + std::to_string(S.size()) + " exceeds "
                           + std::to_string(max_exhaustive_size));
    }
    std::size_t const                     m = S.size();
    std::vector<bool>                     generating(std::size_t{1} << m);
    std::vector<std::vector<std::size_t>> out;
    for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
      std::vector<std::size_t> gens;
      for (std::size_t i = 0; i < m; ++i) {
        if ((mask >> i) & 1UL) {
          gens.push_back(i);
        }
      }
      generating[mask] = generates(S, gens);
    }
    for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
      if (!generating[mask]) {
        continue;
      }
      bool minimal = true;
      for (std::size_t i = 0; i < m && minimal; ++i) {
        if ((mask >> i) & 1UL) {
          minimal = !generating[mask & ~(1UL << i)];
        }
      }
      if (minimal) {
        std::vector<std::size_t> gens;
        for (std::size_t i = 0; i < m; ++i) {
          if ((mask >> i) & 1UL) {
            gens.push_back(i);
          }
        }
        out.push_back(std::move(gens));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace odct
