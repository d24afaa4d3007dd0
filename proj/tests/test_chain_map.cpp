#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "odct/chain_map.hpp"
#include "odct/error.hpp"
#include "odct/family.hpp"
#include "support.hpp"

using namespace odct;
using test_support::cm;
using test_support::raw;

namespace {
  std::vector<ChainMap> all_maps(int n) {
    return test_support::cooked(oracle::family(n, "T"));
  }
}  // namespace

TEST_CASE("compose applies the left factor first") {
  auto const lambda = cm({3, 3, 3, 4, 5, 6, 7, 8, 9, 9});
  auto const beta1  = cm({3, 3, 4, 5, 5, 6, 7, 7, 8, 9});
  CHECK(lambda * beta1 == cm({4, 4, 4, 5, 5, 6, 7, 7, 8, 8}));
  CHECK(compose(ChainMap::identity(3), cm({1, 1, 2})) == cm({1, 1, 2}));
  CHECK(cm({1, 1, 2}) * cm({1, 2, 2}) == cm({1, 1, 2}));
  CHECK_THROWS_AS(compose(cm({1, 1}), cm({1, 1, 1})), invalid_input);
}

TEST_CASE("compose agrees with the raw oracle on every pair for n = 3") {
  auto const maps = all_maps(3);
  for (auto const& a : maps) {
    for (auto const& b : maps) {
      REQUIRE(raw(a * b) == oracle::compose(raw(a), raw(b)));
    }
  }
}

TEST_CASE("compose is associative on T_3") {
  auto const maps = all_maps(3);
  for (auto const& a : maps) {
    for (auto const& b : maps) {
      for (auto const& c : maps) {
        REQUIRE((a * b) * c == a * (b * c));
      }
    }
  }
}

TEST_CASE("ChainMap construction validates its images") {
  CHECK_THROWS_AS(ChainMap(std::vector<int>{}), invalid_input);
  CHECK_THROWS_AS(cm({0, 1}), invalid_input);
  CHECK_THROWS_AS(cm({1, 3}), invalid_input);
  CHECK_THROWS_AS(ChainMap::identity(0), invalid_input);
  CHECK_THROWS_AS(ChainMap::constant(3, 4), invalid_input);
  CHECK(ChainMap::constant(3, 2) == cm({2, 2, 2}));
  CHECK(ChainMap::identity(4).is_identity());
  CHECK(cm({1, 2, 2}).rank() == 2);
  CHECK(cm({1, 2, 2}).image_set() == std::vector<int>{1, 2});
  CHECK(cm({1, 2, 2}).preimage(2) == std::vector<int>{2, 3});
  CHECK(cm({1, 2, 2}).preimage(3).empty());
}

TEST_CASE("ordering is lexicographic on image sequences") {
  CHECK(cm({1, 1, 2}) < cm({1, 2, 1}));
  CHECK(cm({1}) < cm({1, 1}));
  ChainMapHash h;
  CHECK(h(cm({1, 2})) == h(cm({1, 2})));
}

TEST_CASE("predicates on the documented examples") {
  auto const a = cm({1, 1, 2});
  CHECK(is_order_preserving(a));
  CHECK(is_order_decreasing(a));
  CHECK(is_contraction(a));
  CHECK_FALSE(is_isometry(a));
  CHECK_FALSE(is_contraction(cm({1, 3, 3})));

  for (int n = 1; n <= 5; ++n) {
    auto const id = ChainMap::identity(n);
    CHECK(is_order_preserving(id));
    CHECK(is_order_decreasing(id));
    CHECK(is_contraction(id));
    CHECK(is_isometry(id));
    CHECK(is_idempotent(id));
    CHECK(is_order_reversing(id) == (n == 1));
  }
  CHECK(is_isometry(cm({3, 2, 1})));
  CHECK(is_order_reversing(cm({3, 2, 1})));
}

TEST_CASE("predicates agree with the adjacent-step oracle for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (auto const& m : oracle::family(n, "T")) {
      ChainMap const a(m);
      REQUIRE(is_order_preserving(a) == oracle::order_preserving(m));
      REQUIRE(is_order_reversing(a) == oracle::order_reversing(m));
      REQUIRE(is_order_decreasing(a) == oracle::order_decreasing(m));
      REQUIRE(is_contraction(a) == oracle::contraction(m));
      REQUIRE(is_idempotent(a) == (oracle::compose(m, m) == m));
    }
  }
}

TEST_CASE("membership lists the nested families") {
  using F = Family;
  CHECK(membership(cm({1, 1, 2}))
        == std::vector<F>{F::T, F::CT, F::ORCT, F::OCT, F::ODCT});
  CHECK(membership(cm({2, 2, 2}))
        == std::vector<F>{F::T, F::CT, F::ORCT, F::OCT});
  CHECK(membership(cm({2, 1})) == std::vector<F>{F::T, F::CT, F::ORCT});
  CHECK(membership(cm({1, 3, 1})) == std::vector<F>{F::T});
  CHECK(membership(cm({1, 2, 1})) == std::vector<F>{F::T, F::CT});

  // ODCT in OCT in ORCT in CT in T, on every map with n <= 4.
  for (int n = 1; n <= 4; ++n) {
    for (auto const& a : all_maps(n)) {
      auto const tags = membership(a);
      std::vector<F> const chain{F::T, F::CT, F::ORCT, F::OCT, F::ODCT};
      REQUIRE(tags.size() >= 1);
      for (std::size_t i = 0; i < tags.size(); ++i) {
        REQUIRE(tags[i] == chain[i]);
      }
    }
  }
}

TEST_CASE("family names parse and print") {
  for (auto f : {Family::T, Family::CT, Family::OCT, Family::ORCT,
                 Family::ODCT}) {
    CHECK(parse_family(to_string(f)) == f);
  }
  CHECK_THROWS_AS(parse_family("odct"), invalid_input);
  CHECK_THROWS_AS(parse_family(""), invalid_input);
}

TEST_CASE("each family is closed under composition for n <= 5") {
  for (auto f : {Family::CT, Family::OCT, Family::ORCT, Family::ODCT}) {
    for (int n = 1; n <= 5; ++n) {
      auto const members = enumerate_filtered({f, n});
      for (auto const& a : members) {
        for (auto const& b : members) {
          REQUIRE(belongs_to(a * b, f));
        }
      }
    }
  }
}

TEST_CASE("block forms of the documented maps") {
  auto const bf = to_block_form(cm({1, 1, 2}));
  CHECK(bf.blocks == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(bf.values == std::vector<int>{1, 2});
  CHECK(bf.degree() == 3);

  auto const c = to_block_form(ChainMap::constant(4, 1));
  CHECK(c.blocks == std::vector<std::vector<int>>{{1, 2, 3, 4}});
  CHECK(c.values == std::vector<int>{1});

  auto const alpha = to_block_form(cm({4, 4, 4, 5, 5, 6, 7, 7, 8, 8}));
  CHECK(alpha.blocks
        == std::vector<std::vector<int>>{
            {1, 2, 3}, {4, 5}, {6}, {7, 8}, {9, 10}});
  CHECK(alpha.values == std::vector<int>{4, 5, 6, 7, 8});

  // Blocks are listed by least point even when values are not increasing.
  auto const r = to_block_form(cm({3, 1, 3}));
  CHECK(r.blocks == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(r.values == std::vector<int>{3, 1});
}

TEST_CASE("block form round trips on every map with n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (auto const& a : all_maps(n)) {
      REQUIRE(from_block_form(to_block_form(a)) == a);
    }
  }
}

TEST_CASE("block form round trips on random valid forms") {
  std::mt19937 rng(20261014);
  for (int trial = 0; trial < 500; ++trial) {
    int const n = std::uniform_int_distribution<int>(1, 9)(rng);
    // Random set partition via restricted growth labels.
    std::vector<int> label(static_cast<std::size_t>(n));
    int              parts = 0;
    for (int i = 0; i < n; ++i) {
      int const l = std::uniform_int_distribution<int>(0, parts)(rng);
      label[static_cast<std::size_t>(i)] = l;
      parts = std::max(parts, l + 1);
    }
    BlockForm bf;
    bf.blocks.resize(static_cast<std::size_t>(parts));
    for (int i = 0; i < n; ++i) {
      bf.blocks[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])]
          .push_back(i + 1);
    }
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    bf.values.assign(pool.begin(), pool.begin() + parts);
    REQUIRE(to_block_form(from_block_form(bf)) == bf);
  }
}

TEST_CASE("from_block_form rejects malformed partitions") {
  using B = std::vector<std::vector<int>>;
  auto bad = [](B blocks, std::vector<int> values) {
    return BlockForm{std::move(blocks), std::move(values)};
  };
  CHECK_THROWS_AS(from_block_form(bad({{1, 2}, {2, 3}}, {1, 2})),
                  invalid_input);  // overlap
  CHECK_THROWS_AS(from_block_form(bad({{1}, {3}}, {1, 2})),
                  invalid_input);  // 2 missing
  CHECK_THROWS_AS(from_block_form(bad({{3}, {1, 2}}, {2, 1})),
                  invalid_input);  // not listed by least point
  CHECK_THROWS_AS(from_block_form(bad({{1}, {2}}, {1, 1})),
                  invalid_input);  // repeated value
  CHECK_THROWS_AS(from_block_form(bad({{1}, {}, {2}}, {1, 2, 2})),
                  invalid_input);  // empty block
  CHECK_THROWS_AS(from_block_form(bad({{1, 2}}, {1, 2})),
                  invalid_input);  // value count
  CHECK_THROWS_AS(from_block_form(bad({{2, 1}}, {1})),
                  invalid_input);  // unsorted block
  CHECK_THROWS_AS(from_block_form(bad({{1, 2}}, {3})),
                  invalid_input);  // value out of range
}

TEST_CASE("ODCT members have interval blocks sent to 1..p") {
  for (int n = 1; n <= 7; ++n) {
    for (auto const& a : enumerate_filtered({Family::ODCT, n})) {
      auto const bf = to_block_form(a);
      int        next = 1;
      for (std::size_t i = 0; i < bf.blocks.size(); ++i) {
        REQUIRE(bf.values[i] == static_cast<int>(i) + 1);
        for (int x : bf.blocks[i]) {
          REQUIRE(x == next++);
        }
      }
    }
  }
}

TEST_CASE("two ODCT members of equal rank share an image, and equal kernels "
          "force equal maps") {
  for (int n = 1; n <= 6; ++n) {
    auto const members = enumerate_filtered({Family::ODCT, n});
    for (auto const& a : members) {
      for (auto const& b : members) {
        if (a.rank() == b.rank()) {
          REQUIRE(a.image_set() == b.image_set());
        }
        if (to_block_form(a).blocks == to_block_form(b).blocks) {
          REQUIRE(a == b);
        }
      }
    }
  }
}

TEST_CASE("the gap condition characterises order-preserving contractions") {
  for (int n = 1; n <= 5; ++n) {
    for (auto const& a : all_maps(n)) {
      bool const expected = is_order_preserving(a) && is_contraction(a);
      REQUIRE(satisfies_block_gap_condition(to_block_form(a)) == expected);
    }
  }
  // Checking only the interior indices 2..p-1 would accept [1,1,3]: its one
  // jump is between the last two blocks.
  auto const bf = to_block_form(cm({1, 1, 3}));
  REQUIRE(bf.blocks.size() == 2);
  CHECK_FALSE(satisfies_block_gap_condition(bf));
  CHECK_FALSE(is_contraction(cm({1, 1, 3})));
}

TEST_CASE("transversal checks") {
  auto const bf = to_block_form(cm({1, 1, 2}));
  auto       t  = transversal_checks(bf, Transversal{{2, 3}});
  CHECK(t.is_transversal);
  CHECK(t.is_convex);
  CHECK(t.is_admissible);

  t = transversal_checks(bf, Transversal{{1, 3}});
  CHECK(t.is_transversal);
  CHECK_FALSE(t.is_convex);
  CHECK_FALSE(t.is_admissible);

  t = transversal_checks(bf, Transversal{{1, 2}});
  CHECK_FALSE(t.is_transversal);
  CHECK_FALSE(t.is_admissible);

  auto const one = to_block_form(ChainMap::constant(4, 1));
  t              = transversal_checks(one, Transversal{{1}});
  CHECK(t.is_transversal);
  CHECK(t.is_convex);
  CHECK(t.is_admissible);
}

TEST_CASE("text forms print and parse") {
  CHECK(to_string(cm({1, 1, 2})) == "n=3;[1,1,2]");
  CHECK(parse_chain_map("n=3;[1,1,2]") == cm({1, 1, 2}));
  auto const bf = to_block_form(cm({1, 1, 1, 2, 2, 3}));
  CHECK(to_string(bf) == "{1,2,3|4,5|6}->[1,2,3]");
  CHECK(parse_block_form("{1,2,3|4,5|6}->[1,2,3]") == bf);

  std::ostringstream os;
  os << cm({2, 1}) << ' ' << to_block_form(cm({2, 1}));
  CHECK(os.str() == "n=2;[2,1] {1|2}->[2,1]");
}

TEST_CASE("text forms round trip bit-exactly for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (auto const& a : all_maps(n)) {
      auto const s = to_string(a);
      REQUIRE(parse_chain_map(s) == a);
      REQUIRE(to_string(parse_chain_map(s)) == s);
      auto const b = to_string(to_block_form(a));
      REQUIRE(to_string(parse_block_form(b)) == b);
    }
  }
}

TEST_CASE("text parsers reject malformed input") {
  for (char const* s :
       {"", "n=3;[1,2]", "n=3;[1,2,4]", " n=3;[1,2,3]", "n=03;[1,2,3]",
        "n=3;[1,2,3] ", "n=3;[1,2,3", "n=3[1,2,3]", "n=0;[]", "n=2;[1,,2]",
        "n=2;[01,2]", "n=2;[-1,2]"}) {
    CAPTURE(s);
    CHECK_THROWS_AS(parse_chain_map(s), invalid_input);
  }
  for (char const* s : {"", "{1,2}->[1]x", "{1|1}->[1,2]", "{1,2}->[]",
                        "{1|2}->[1]", "{2|1}->[1,2]", "{}->[1]"}) {
    CAPTURE(s);
    CHECK_THROWS_AS(parse_block_form(s), invalid_input);
  }
}
