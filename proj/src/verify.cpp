#include "odct/verify.hpp"

#include <algorithm>
#include <sstream>

#include "odct/error.hpp"
#include "odct/family.hpp"
#include "odct/rank.hpp"
#include "odct/starred.hpp"

namespace odct {

  FiniteSemigroup make_family(Family f, int n, int max_filter_n) {
    if (f == Family::ODCT && n > max_filter_n) {
      return FiniteSemigroup::from_elements(enumerate_odct_direct(n));
    }
    return FiniteSemigroup::from_elements(
        enumerate_filtered({f, n}, max_filter_n));
  }

  namespace {
    std::string show(ChainMap const& a) {
      return to_string(a);
    }

    std::string show_class(FiniteSemigroup const&         S,
                           std::vector<std::size_t> const& cls) {
      std::string out = "{";
      for (std::size_t i = 0; i < cls.size(); ++i) {
        out += (i ? " " : "") + show(S.at(cls[i]));
      }
      return out + "}";
    }

    // First class of `got` that differs from `want`, for failure records.
    std::string first_difference(FiniteSemigroup const& S,
                                 EquivPartition const&  got,
                                 EquivPartition const&  want) {
      for (std::size_t i = 0; i < S.size(); ++i) {
        if (got.class_containing(i) != want.class_containing(i)) {
          return "class of " + show(S.at(i)) + " is "
                 + show_class(S, got.class_containing(i)) + ", expected "
                 + show_class(S, want.class_containing(i));
        }
      }
      return "partitions agree";
    }

    class Recorder {
     public:
      Recorder(std::string name, std::string claim) {
        result_.name  = std::move(name);
        result_.claim = std::move(claim);
      }

      void require(bool ok, int n, std::string const& what) {
        if (!ok) {
          result_.passed = false;
          result_.failures.push_back("n=" + std::to_string(n) + ": " + what);
        }
      }

      CheckResult take() {
        return std::move(result_);
      }

     private:
      CheckResult result_;
    };

    std::vector<ChainMap> maps_of(FiniteSemigroup const&          S,
                                  std::vector<std::size_t> const& idx) {
      std::vector<ChainMap> out;
      for (auto i : idx) {
        out.push_back(S.at(i));
      }
      return out;
    }

    CheckResult check_canonical_form(VerifyOptions const& o) {
      Recorder r("canonical-form",
                 "ODCT_n elements send interval blocks A_1<...<A_p to "
                 "1..p; equal rank gives equal image, equal kernel gives "
                 "equal maps");
      for (int n = 1; n <= std::min(7, o.n_max); ++n) {
        auto const S = make_family(Family::ODCT, n, o.max_filter_n);
        for (auto const& a : S.elements()) {
          auto const bf = to_block_form(a);
          bool ok = satisfies_block_gap_condition(bf);
          for (std::size_t i = 0; i < bf.values.size(); ++i) {
            ok = ok && bf.values[i] == static_cast<int>(i + 1);
          }
          r.require(ok, n, "non-canonical block form " + to_string(bf));
          for (auto const& b : S.elements()) {
            if (a.rank() == b.rank()) {
              r.require(a.image_set() == b.image_set(), n,
                        "equal rank, different images: " + show(a) + " "
                            + show(b));
            }
            if (to_block_form(a).blocks == to_block_form(b).blocks) {
              r.require(a == b, n,
                        "equal kernels, different maps: " + show(a) + " "
                            + show(b));
            }
          }
        }
      }
      return r.take();
    }

    CheckResult check_enumeration(VerifyOptions const& o) {
      Recorder r("enumeration-consistency",
                 "direct ODCT_n generation equals the n^n filter and has "
                 "2^(n-1) elements");
      for (int n = 1; n <= std::min({7, o.n_max, o.max_filter_n}); ++n) {
        auto const direct   = enumerate_odct_direct(n);
        auto const filtered = enumerate_filtered({Family::ODCT, n},
                                                 o.max_filter_n);
        r.require(direct == filtered, n, "direct and filtered sets differ");
        r.require(direct.size() == (std::size_t{1} << (n - 1)), n,
                  "|ODCT_n| = " + std::to_string(direct.size()));
      }
      return r.take();
    }

    CheckResult check_j_trivial(VerifyOptions const& o) {
      Recorder r("green-j-trivial",
                 "every Green's partition of ODCT_n is discrete, and D = J");
      for (int n = 1; n <= std::min(6, o.n_max); ++n) {
        auto const S = make_family(Family::ODCT, n, o.max_filter_n);
        auto const g = greens_partitions(S);
        std::pair<char const*, EquivPartition const*> rels[]
            = {{"L", &g.L}, {"R", &g.R}, {"H", &g.H}, {"D", &g.D},
               {"J", &g.J}};
        for (auto [name, p] : rels) {
          r.require(p->is_discrete(), n,
                    std::string(name) + " not discrete: "
                        + first_difference(S, *p,
                                           EquivPartition::discrete(S.size())));
        }
        r.require(g.D == g.J, n, "D != J");
        r.require(is_j_trivial(S), n, "is_j_trivial returned false");
      }
      return r.take();
    }

    CheckResult check_starred(VerifyOptions const& o) {
      Recorder r("starred-characterization",
                 "on ODCT_n: L* is image equality, R* is equality, H* = R*, "
                 "D* = L*, J* = D*, and a in J*(b) forces Im a in Im b");
      for (int n = 1; n <= std::min(5, o.n_max); ++n) {
        auto const S     = make_family(Family::ODCT, n, o.max_filter_n);
        auto const rep   = abundance_report(S);
        auto const image = image_partition(S);
        auto const disc  = EquivPartition::discrete(S.size());
        r.require(rep.lstar == image, n,
                  "L*: " + first_difference(S, rep.lstar, image));
        r.require(rep.rstar == disc, n,
                  "R*: " + first_difference(S, rep.rstar, disc));
        r.require(rep.hstar == rep.rstar, n, "H* != R*");
        r.require(rep.dstar == rep.lstar, n, "D* != L*");
        r.require(rep.jstar == rep.dstar, n,
                  "J*: " + first_difference(S, rep.jstar, rep.dstar));
        auto const g = greens_partitions(S);
        r.require(g.L.refines(rep.lstar) && g.R.refines(rep.rstar), n,
                  "classical relation not contained in its starred analogue");
        for (std::size_t a = 0; a < S.size(); ++a) {
          for (std::size_t b = 0; b < S.size(); ++b) {
            bool const lit = lstar_definitional(a, b, S);
            bool const rit = rstar_definitional(a, b, S);
            r.require(lit == rep.lstar.related(a, b)
                          && rit == rep.rstar.related(a, b),
                      n,
                      "pairwise definition disagrees with fingerprints at "
                          + show(S.at(a)) + " " + show(S.at(b)));
            r.require(lit == lstar_theorem(S.at(a), S.at(b))
                          && rit == rstar_theorem(S.at(a), S.at(b)),
                      n,
                      "closed form disagrees with definition at "
                          + show(S.at(a)) + " " + show(S.at(b)));
          }
          auto const ideal = jstar_ideal(S, rep.dstar, a);
          auto const ib    = S.at(a).image_set();
          for (std::size_t x = 0; x < S.size(); ++x) {
            if (!ideal[x]) {
              continue;
            }
            auto const ix = S.at(x).image_set();
            r.require(std::includes(ib.begin(), ib.end(), ix.begin(),
                                    ix.end()),
                      n,
                      show(S.at(x)) + " in J*(" + show(S.at(a))
                          + ") without image containment");
          }
        }
      }
      return r.take();
    }

    CheckResult check_abundance(VerifyOptions const& o) {
      Recorder r("abundance",
                 "ODCT_n is left abundant and left adequate; right abundant "
                 "exactly for n <= 2; for n = 3 the only gap is the R*-class "
                 "of [1,1,2]");
      for (int n = 1; n <= std::min(6, o.n_max); ++n) {
        auto const S   = make_family(Family::ODCT, n, o.max_filter_n);
        auto const rep = abundance_report(S);
        r.require(rep.left_abundant, n, "not left abundant");
        r.require(rep.left_adequate, n, "not left adequate");
        r.require(rep.right_abundant == (n <= 2), n,
                  std::string("right_abundant = ")
                      + (rep.right_abundant ? "true" : "false"));
        if (n == 3) {
          auto const gap = *S.index_of(ChainMap({1, 1, 2}));
          bool const exact
              = rep.witness_gaps.size() == 1
                && rep.witness_gaps[0].relation == "R*"
                && rep.witness_gaps[0].members
                       == std::vector<std::size_t>{gap};
          r.require(exact, n, "witness gaps differ from {R*: {[1,1,2]}}");
        }
      }
      return r.take();
    }

    CheckResult check_semilattice(VerifyOptions const& o) {
      Recorder r("idempotent-semilattice",
                 "E(ODCT_n) = {e_1..e_n}, a semilattice with e_k e_p = "
                 "e_min(k,p); regular elements are the idempotents");
      for (int n = 1; n <= std::min(7, o.n_max); ++n) {
        auto const            S = make_family(Family::ODCT, n, o.max_filter_n);
        auto const            E = maps_of(S, idempotents(S));
        std::vector<ChainMap> expected;
        for (int p = 1; p <= n; ++p) {
          expected.push_back(idempotent_odct(n, p));
        }
        std::sort(expected.begin(), expected.end());
        r.require(E == expected, n, "idempotent set differs");
        r.require(is_semilattice(E), n, "E(S) is not a semilattice");
        for (int k = 1; k <= n; ++k) {
          for (int p = 1; p <= n; ++p) {
            auto const want = idempotent_odct(n, std::min(k, p));
            r.require(idempotent_odct(n, k) * idempotent_odct(n, p) == want,
                      n,
                      "e_" + std::to_string(k) + " e_" + std::to_string(p)
                          + " != e_min");
          }
        }
        r.require(regular_elements(S) == idempotents(S), n,
                  "regular elements differ from idempotents");
      }
      return r.take();
    }

    CheckResult check_ladder(VerifyOptions const& o) {
      Recorder r("generator-ladder",
                 "|G_(n-1)| = n-1, every element of rank <= n-2 lifts to a "
                 "product of two rank-(p+1) elements, <G_(n-1)> = ODCT_n \\ "
                 "{id}");
      for (int n = 2; n <= std::min(8, o.n_max); ++n) {
        auto const S      = make_family(Family::ODCT, n, o.max_filter_n);
        auto const ladder = rank_ladder(S);
        auto const top    = maps_of(S, ladder.by_rank.at(n - 1));
        r.require(top.size() == static_cast<std::size_t>(n - 1), n,
                  "|G_(n-1)| = " + std::to_string(top.size()));
        std::vector<ChainMap> taus;
        for (int i = 1; i <= n - 1; ++i) {
          taus.push_back(tau(n, i));
        }
        std::sort(taus.begin(), taus.end());
        r.require(taus == top, n, "{tau_i} != G_(n-1)");
        if (n > 6) {
          continue;
        }
        for (auto const& a : S.elements()) {
          if (a.rank() > n - 2) {
            continue;
          }
          auto const d  = lift_decomposition(a);
          bool const ok = d.split * d.collapse == a
                          && d.split.rank() == a.rank() + 1
                          && d.collapse.rank() == a.rank() + 1
                          && S.contains(d.split) && S.contains(d.collapse);
          r.require(ok, n, "lift failed for " + show(a));
        }
        auto const generated = closure(top);
        auto expected = maps_of(S, ladder.ideals.at(n - 1));
        r.require(std::vector<ChainMap>(generated.elements().begin(),
                                        generated.elements().end())
                      == expected,
                  n, "<G_(n-1)> != ODCT_n \\ {id}");
      }
      return r.take();
    }

    CheckResult check_rank(VerifyOptions const& o) {
      Recorder r("rank",
                 "rank(K_(n-1)) = n-1 with unique minimum generating set "
                 "G_(n-1), rank(ODCT_n) = n with G_(n-1) u {id}");
      for (int n = 3; n <= std::min(6, o.n_max); ++n) {
        auto const S      = make_family(Family::ODCT, n, o.max_filter_n);
        auto const ladder = rank_ladder(S);
        auto const K = FiniteSemigroup::from_elements(
            maps_of(S, ladder.ideals.at(n - 1)));
        auto const top = maps_of(S, ladder.by_rank.at(n - 1));

        auto const ck = rank_exact(K);
        r.require(ck.generators == top && ck.is_generating && ck.is_minimal
                      && ck.is_unique_minimum == true,
                  n, "K_(n-1) certificate: rank "
                         + std::to_string(ck.generators.size()));

        auto const cs   = rank_exact(S);
        auto       want = top;
        want.push_back(ChainMap::identity(n));
        std::sort(want.begin(), want.end());
        r.require(cs.generators == want && cs.is_generating && cs.is_minimal
                      && cs.is_unique_minimum == true
                      && cs.generators.size() == static_cast<std::size_t>(n),
                  n, "ODCT_n certificate: rank "
                         + std::to_string(cs.generators.size()));

        if (n <= 4) {
          auto const all_s = minimal_generating_sets_exhaustive(S);
          r.require(all_s.size() == 1 && maps_of(S, all_s.front()) == want, n,
                    "exhaustive search found "
                        + std::to_string(all_s.size())
                        + " minimal generating sets of ODCT_n");
          auto const all_k = minimal_generating_sets_exhaustive(K);
          r.require(all_k.size() == 1 && maps_of(K, all_k.front()) == top, n,
                    "exhaustive search found "
                        + std::to_string(all_k.size())
                        + " minimal generating sets of K_(n-1)");
        }
      }
      return r.take();
    }

    CheckResult check_natural_order(VerifyOptions const& o) {
      Recorder r("natural-order-equivalence",
                 std::string("closed-form order criteria agree with the "
                             "definitional witness search on OCT_n (n <= 5) "
                             "and ODCT_n (n <= 7), interior reading ")
                     + std::string(to_string(o.reading)));
      for (int n = 1; n <= std::min(5, o.n_max); ++n) {
        auto const S     = make_family(Family::OCT, n, o.max_filter_n);
        auto const table = order_table(S);
        r.require(is_partial_order(table, S.size()), n,
                  "OCT_n order is not a partial order");
        std::vector<bool> related(S.size() * S.size(), false);
        for (auto [x, y] : table) {
          related[x * S.size() + y] = true;
        }
        for (std::size_t x = 0; x < S.size(); ++x) {
          for (std::size_t y = 0; y < S.size(); ++y) {
            auto const& a   = S.at(x);
            auto const& b   = S.at(y);
            bool const  def = related[x * S.size() + y];
            r.require(def == leq_oct_theorem(a, b), n,
                      "OCT criterion disagrees at " + show(a) + " <= "
                          + show(b));
            r.require(!def || leq_pn_criterion(a, b), n,
                      "partial-map criterion fails at " + show(a) + " <= "
                          + show(b));
            if (def) {
              auto const w = construct_witnesses(a, b);
              r.require(validates(w, a, b) && belongs_to(w.lambda, Family::OCT)
                            && belongs_to(w.mu, Family::OCT),
                        n,
                        "constructed witness invalid at " + show(a) + " <= "
                            + show(b));
            }
          }
        }
      }
      for (int n = 1; n <= std::min(7, o.n_max); ++n) {
        auto const S     = make_family(Family::ODCT, n, o.max_filter_n);
        auto const table = order_table(S);
        r.require(is_partial_order(table, S.size()), n,
                  "ODCT_n order is not a partial order");
        std::vector<bool> related(S.size() * S.size(), false);
        for (auto [x, y] : table) {
          related[x * S.size() + y] = true;
        }
        bool const have_oct = n <= o.max_filter_n;
        auto const ambient  = have_oct ? make_family(Family::OCT, n,
                                                     o.max_filter_n)
                                       : S;
        for (std::size_t x = 0; x < S.size(); ++x) {
          for (std::size_t y = 0; y < S.size(); ++y) {
            auto const& a   = S.at(x);
            auto const& b   = S.at(y);
            bool const  def = related[x * S.size() + y];
            r.require(def == leq_odct_theorem(a, b, o.reading), n,
                      "ODCT criterion disagrees at " + show(a) + " <= "
                          + show(b));
            if (have_oct) {
              bool const in_oct = leq_definitional(a, b, ambient).has_value();
              r.require(def == in_oct, n,
                        "order differs between ODCT_n and OCT_n ambients at "
                            + show(a) + " <= " + show(b));
            }
          }
        }
      }
      return r.take();
    }

    CheckResult check_worked_example() {
      Recorder r("worked-example-n10",
                 "at n = 10 the displayed lambda, mu certify alpha <= beta_1, "
                 "and alpha <= beta_2 fails only the interior-preimage "
                 "clause");
      int const      n = 10;
      ChainMap const alpha({4, 4, 4, 5, 5, 6, 7, 7, 8, 8});
      ChainMap const beta1({3, 3, 4, 5, 5, 6, 7, 7, 8, 9});
      ChainMap const beta2({3, 3, 4, 5, 6, 7, 7, 7, 8, 9});
      ChainMap const lambda({3, 3, 3, 4, 5, 6, 7, 8, 9, 9});
      ChainMap const mu({4, 4, 4, 4, 5, 6, 7, 8, 8, 8});
      for (auto const* m : {&alpha, &beta1, &beta2, &lambda, &mu}) {
        r.require(belongs_to(*m, Family::OCT), n, show(*m) + " not in OCT");
      }
      r.require(validates({lambda, mu}, alpha, beta1), n,
                "displayed witnesses do not validate");
      auto const w = construct_witnesses(alpha, beta1);
      r.require(w.lambda == lambda && w.mu == mu, n,
                "constructed witnesses differ from the displayed ones");
      r.require(leq_oct_theorem(alpha, beta1), n, "alpha <= beta_1 rejected");
      r.require(leq_pn_criterion(alpha, beta1), n,
                "partial-map criterion rejects alpha <= beta_1");
      auto const v2 = leq_oct_verdict(alpha, beta2);
      r.require(!v2.holds
                    && v2.failing
                           == std::vector<OrderClause>{
                               OrderClause::middle_preimages},
                n, "alpha <= beta_2 verdict has the wrong failing clauses");
      r.require(!leq_pn_criterion(alpha, beta2), n,
                "partial-map criterion accepts alpha <= beta_2");
      return r.take();
    }
  }  // namespace

  std::vector<CheckResult> verify_all(VerifyOptions const& options) {
    if (options.n_max < 1) {
      throw invalid_input("verify_all: n-max must be positive");
    }
    std::vector<CheckResult> out;
    out.push_back(check_abundance(options));
    out.push_back(check_canonical_form(options));
    out.push_back(check_enumeration(options));
    out.push_back(check_ladder(options));
    out.push_back(check_j_trivial(options));
    out.push_back(check_semilattice(options));
    out.push_back(check_natural_order(options));
    out.push_back(check_rank(options));
    out.push_back(check_starred(options));
    out.push_back(check_worked_example());
    std::sort(out.begin(), out.end(),
              [](auto const& a, auto const& b) { return a.name < b.name; });
    return out;
  }

}  // namespace odct
