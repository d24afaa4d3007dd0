#pragma once

#include <set>
#include <string>
#include <vector>

#include "odct/chain_map.hpp"
#include "odct/semigroup.hpp"
#include "oracles.hpp"

namespace test_support {

  inline oracle::Map raw(odct::ChainMap const& a) {
    return {a.images().begin(), a.images().end()};
  }

  inline std::vector<oracle::Map> raw(std::span<odct::ChainMap const> v) {
    std::vector<oracle::Map> out;
    for (auto const& a : v) {
      out.push_back(raw(a));
    }
    return out;
  }

  inline std::vector<odct::ChainMap>
  cooked(std::vector<oracle::Map> const& v) {
    std::vector<odct::ChainMap> out;
    for (auto const& a : v) {
      out.emplace_back(a);
    }
    return out;
  }

  inline oracle::MonoidView view(odct::FiniteSemigroup const& S) {
    return {raw(S.elements()), S.degree()};
  }

  inline std::set<std::set<std::size_t>>
  as_sets(odct::EquivPartition const& p) {
    std::set<std::set<std::size_t>> out;
    for (auto const& c : p.classes()) {
      out.emplace(c.begin(), c.end());
    }
    return out;
  }

  inline odct::ChainMap cm(std::vector<int> images) {
    return odct::ChainMap(std::move(images));
  }

}  // namespace test_support
