#include <algorithm>

#include "doctest.h"
#include "odct/error.hpp"
#include "odct/family.hpp"
#include "odct/starred.hpp"
#include "odct/verify.hpp"
#include "support.hpp"

using namespace odct;
using test_support::as_sets;
using test_support::cm;
using test_support::view;

namespace {
  FiniteSemigroup odct_sg(int n) {
    return make_family(Family::ODCT, n);
  }

  std::size_t idx(FiniteSemigroup const& S, std::vector<int> images) {
    return *S.index_of(ChainMap(std::move(images)));
  }
}  // namespace

TEST_CASE("definitional starred relations on ODCT_3") {
  auto const S = odct_sg(3);
  auto const a = idx(S, {1, 1, 2});
  auto const b = idx(S, {1, 2, 2});
  CHECK(lstar_definitional(a, a, S));
  CHECK(rstar_definitional(a, a, S));
  CHECK(lstar_definitional(a, b, S));
  CHECK_FALSE(rstar_definitional(a, b, S));
  CHECK_FALSE(lstar_definitional(idx(S, {1, 1, 1}), idx(S, {1, 2, 3}), S));
}

TEST_CASE("fingerprint partitions equal literal quantification") {
  std::vector<FiniteSemigroup> cases{
      make_family(Family::T, 3), make_family(Family::OCT, 3),
      make_family(Family::OCT, 4), make_family(Family::CT, 3), odct_sg(4),
      odct_sg(5),
      closure({cm({2, 3, 4, 1}), cm({1, 1, 3, 4})})};
  for (auto const& S : cases) {
    auto const v = view(S);
    auto const L = oracle::classes(S.size(), [&](auto i, auto j) {
      return oracle::lstar(v, v.elems[i], v.elems[j]);
    });
    auto const R = oracle::classes(S.size(), [&](auto i, auto j) {
      return oracle::rstar(v, v.elems[i], v.elems[j]);
    });
    REQUIRE(as_sets(lstar_partition(S)) == L);
    REQUIRE(as_sets(rstar_partition(S)) == R);
    for (std::size_t i = 0; i < S.size(); ++i) {
      for (std::size_t j = 0; j < S.size(); ++j) {
        REQUIRE(lstar_definitional(i, j, S)
                == lstar_partition(S).related(i, j));
        REQUIRE(rstar_definitional(i, j, S)
                == rstar_partition(S).related(i, j));
      }
    }
  }
}

TEST_CASE("classical relations refine the starred ones") {
  for (auto const& S :
       {make_family(Family::T, 3), make_family(Family::OCT, 4), odct_sg(5),
        make_family(Family::ORCT, 4)}) {
    auto const g = greens_partitions(S);
    REQUIRE(g.L.refines(lstar_partition(S)));
    REQUIRE(g.R.refines(rstar_partition(S)));
  }
}

TEST_CASE("closed forms of L* and R* on ODCT_n") {
  CHECK(lstar_theorem(cm({1, 1, 2}), cm({1, 2, 2})));
  CHECK_FALSE(lstar_theorem(ChainMap::identity(3), ChainMap::constant(3, 1)));
  CHECK(rstar_theorem(cm({1, 2, 2}), cm({1, 2, 2})));
  CHECK_FALSE(rstar_theorem(cm({1, 1, 2}), cm({1, 2, 2})));
  try {
    lstar_theorem(cm({2, 2}), cm({1, 2}));
    FAIL("expected a scope error");
  } catch (scope_error const& e) {
    CHECK(std::string(e.what()).find("theorem scope is ODCT")
          != std::string::npos);
  }
  CHECK_THROWS_AS(rstar_theorem(cm({1, 2}), cm({1, 2, 3})), scope_error);

  for (int n = 1; n <= 5; ++n) {
    auto const S = odct_sg(n);
    for (std::size_t i = 0; i < S.size(); ++i) {
      for (std::size_t j = 0; j < S.size(); ++j) {
        REQUIRE(lstar_theorem(S.at(i), S.at(j))
                == lstar_definitional(i, j, S));
        REQUIRE(rstar_theorem(S.at(i), S.at(j))
                == rstar_definitional(i, j, S));
      }
    }
  }
}

TEST_CASE("J* on ODCT_3 and trivial cases") {
  auto const S  = odct_sg(3);
  auto const r  = abundance_report(S);
  auto const js = as_sets(r.jstar);
  std::set<std::set<std::size_t>> const expected{
      {idx(S, {1, 1, 1})},
      {idx(S, {1, 1, 2}), idx(S, {1, 2, 2})},
      {idx(S, {1, 2, 3})}};
  CHECK(js == expected);
  CHECK(r.jstar == r.dstar);

  auto const one = FiniteSemigroup::from_elements({cm({1, 1})});
  auto const r1  = abundance_report(one);
  CHECK(r1.jstar.classes().size() == 1);
}

TEST_CASE("starred relations on ODCT_n collapse as expected for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    auto const S = odct_sg(n);
    auto const r = abundance_report(S);
    REQUIRE(r.lstar == image_partition(S));
    REQUIRE(r.rstar.is_discrete());
    REQUIRE(r.hstar == r.rstar);
    REQUIRE(r.dstar == r.lstar);
    REQUIRE(r.jstar == r.dstar);
    REQUIRE(r.hstar.refines(r.lstar));
    REQUIRE(r.hstar.refines(r.rstar));
    REQUIRE(r.lstar.refines(r.dstar));
    REQUIRE(r.rstar.refines(r.dstar));
  }
}

TEST_CASE("J*(b) holds only elements with smaller images") {
  for (int n = 1; n <= 5; ++n) {
    auto const S = odct_sg(n);
    auto const r = abundance_report(S);
    for (std::size_t b = 0; b < S.size(); ++b) {
      auto const mask = jstar_ideal(S, r.dstar, b);
      auto const ib   = S.at(b).image_set();
      REQUIRE(mask[b]);
      for (std::size_t a = 0; a < S.size(); ++a) {
        if (mask[a]) {
          auto const ia = S.at(a).image_set();
          REQUIRE(std::includes(ib.begin(), ib.end(), ia.begin(), ia.end()));
        }
      }
    }
  }
}

TEST_CASE("the rank-p idempotent sits in the L*-class of each rank-p map") {
  for (int n = 1; n <= 5; ++n) {
    auto const S  = odct_sg(n);
    auto const ls = lstar_partition(S);
    for (std::size_t i = 0; i < S.size(); ++i) {
      auto const e = idx(S, [&] {
        auto const m = idempotent_odct(n, S.at(i).rank());
        return std::vector<int>(m.images().begin(), m.images().end());
      }());
      REQUIRE(ls.related(i, e));
    }
  }
}

TEST_CASE("abundance of ODCT_n") {
  auto const r3 = abundance_report(odct_sg(3));
  CHECK(r3.left_abundant);
  CHECK_FALSE(r3.right_abundant);
  CHECK(r3.left_adequate);
  REQUIRE(r3.witness_gaps.size() == 1);
  CHECK(r3.witness_gaps[0].relation == "R*");
  auto const S3 = odct_sg(3);
  CHECK(r3.witness_gaps[0].members
        == std::vector<std::size_t>{idx(S3, {1, 1, 2})});

  auto const r2 = abundance_report(odct_sg(2));
  CHECK(r2.right_abundant);
  CHECK(r2.witness_gaps.empty());

  for (int n = 1; n <= 6; ++n) {
    auto const r = abundance_report(odct_sg(n));
    REQUIRE(r.left_abundant);
    REQUIRE(r.left_adequate);
    REQUIRE(r.right_abundant == (n <= 2));
    // Each non-idempotent is its own R*-class without an idempotent.
    REQUIRE(r.witness_gaps.size() == (std::size_t{1} << (n - 1))
                                         - static_cast<std::size_t>(n));
  }
}

TEST_CASE("abundance on regular semigroups") {
  // Every L- and R-class of a regular semigroup holds an idempotent, and
  // those classes sit inside the starred ones. OCT_4 is not regular:
  // [1,2,2,3] has no inverse there.
  for (auto const& S : {make_family(Family::T, 3), make_family(Family::OCT, 3)}) {
    auto const v = view(S);
    bool const regular = std::all_of(
        v.elems.begin(), v.elems.end(),
        [&](oracle::Map const& a) { return oracle::regular(v, a); });
    REQUIRE(regular);
    auto const r = abundance_report(S);
    CHECK(r.left_abundant);
    CHECK(r.right_abundant);
    // The constant maps are non-commuting idempotents.
    CHECK_FALSE(r.left_adequate);
  }
}

TEST_CASE("starred analyses refuse oversized semigroups") {
  auto const S = FiniteSemigroup::from_elements(enumerate_odct_direct(11));
  REQUIRE(S.size() > max_starred_size);
  CHECK_THROWS_AS(lstar_partition(S), capacity_error);
  CHECK_THROWS_AS(rstar_partition(S), capacity_error);
  CHECK_THROWS_AS(abundance_report(S), capacity_error);
}
