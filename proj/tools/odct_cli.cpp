// Command-line front end: enumeration, relation tables, rank certificates,
// order checks and the full verification matrix.
//
// Exit codes: 0 pass, 1 check failure, 2 usage, 3 capacity.

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "odct/error.hpp"
#include "odct/family.hpp"
#include "odct/natural_order.hpp"
#include "odct/rank.hpp"
#include "odct/semigroup.hpp"
#include "odct/starred.hpp"
#include "odct/verify.hpp"

namespace {

  using json = nlohmann::ordered_json;

  enum exit_code : int { pass = 0, failure = 1, usage = 2, capacity = 3 };

  struct RunConfig {
    std::string family       = "ODCT";
    int         n            = 3;
    int         n_max        = 5;
    std::string format       = "json";
    std::string out;
    int         max_filter_n = odct::default_max_filter_n;
    std::string reading      = "forall";
    std::string check        = "theorem-vs-definitional";
    int         ideal        = 0;
  };

  json element_list(std::span<odct::ChainMap const> xs) {
    json out = json::array();
    for (auto const& a : xs) {
      out.push_back(odct::to_string(a));
    }
    return out;
  }

  json class_table(std::string_view name, odct::EquivPartition const& p) {
    return json{{"relation", name}, {"classes", p.classes()}};
  }

  void csv_rows(std::ostream& os, odct::FiniteSemigroup const& S,
                std::string_view name, odct::EquivPartition const& p) {
    for (auto const& cls : p.classes()) {
      for (auto i : cls) {
        os << name << ',' << cls.front() << ',' << i << ",\""
           << odct::to_string(S.at(i)) << "\"\n";
      }
    }
  }

  void text_rows(std::ostream& os, odct::FiniteSemigroup const& S,
                 std::string_view name, odct::EquivPartition const& p) {
    os << name << ':';
    for (auto const& cls : p.classes()) {
      os << " {";
      for (std::size_t k = 0; k < cls.size(); ++k) {
        os << (k ? " " : "") << odct::to_string(S.at(cls[k]));
      }
      os << '}';
    }
    os << '\n';
  }

  void require_format(RunConfig const& cfg, std::initializer_list<char const*> ok) {
    for (auto f : ok) {
      if (cfg.format == f) {
        return;
      }
    }
    throw odct::invalid_input("format '" + cfg.format
                              + "' is not supported by this command");
  }

  int cmd_enumerate(RunConfig const& cfg, std::ostream& os) {
    require_format(cfg, {"json", "text"});
    auto const f = odct::parse_family(cfg.family);
    auto const elems
        = f == odct::Family::ODCT && cfg.n > cfg.max_filter_n
              ? odct::enumerate_odct_direct(cfg.n)
              : odct::enumerate_filtered({f, cfg.n}, cfg.max_filter_n);
    if (cfg.format == "text") {
      for (auto const& a : elems) {
        os << a << '\n';
      }
    } else {
      os << json{{"n", cfg.n},
                 {"family", cfg.family},
                 {"elements", element_list(elems)}}
                .dump()
         << '\n';
    }
    return pass;
  }

  int cmd_relations(RunConfig const& cfg, std::ostream& os) {
    auto const S
        = odct::make_family(odct::parse_family(cfg.family), cfg.n,
                            cfg.max_filter_n);
    auto const g = odct::greens_partitions(S);
    std::pair<char const*, odct::EquivPartition const*> rels[]
        = {{"L", &g.L}, {"R", &g.R}, {"H", &g.H}, {"D", &g.D}, {"J", &g.J}};
    if (cfg.format == "csv") {
      os << "relation,class,index,element\n";
      for (auto [name, p] : rels) {
        csv_rows(os, S, name, *p);
      }
    } else if (cfg.format == "text") {
      for (auto [name, p] : rels) {
        text_rows(os, S, name, *p);
      }
    } else {
      json tables = json::array();
      for (auto [name, p] : rels) {
        tables.push_back(class_table(name, *p));
      }
      os << json{{"n", cfg.n},
                 {"family", cfg.family},
                 {"elements", element_list(S.elements())},
                 {"j_trivial", g.J.is_discrete()},
                 {"relations", tables}}
                .dump()
         << '\n';
    }
    return pass;
  }

  int cmd_starred(RunConfig const& cfg, std::ostream& os) {
    auto const S
        = odct::make_family(odct::parse_family(cfg.family), cfg.n,
                            cfg.max_filter_n);
    auto const rep = odct::abundance_report(S);
    std::pair<char const*, odct::EquivPartition const*> rels[]
        = {{"L*", &rep.lstar},
           {"R*", &rep.rstar},
           {"H*", &rep.hstar},
           {"D*", &rep.dstar},
           {"J*", &rep.jstar}};
    if (cfg.format == "csv") {
      os << "relation,class,index,element\n";
      for (auto [name, p] : rels) {
        csv_rows(os, S, name, *p);
      }
      return pass;
    }
    if (cfg.format == "text") {
      for (auto [name, p] : rels) {
        text_rows(os, S, name, *p);
      }
      os << std::boolalpha << "left_abundant: " << rep.left_abundant
         << "\nright_abundant: " << rep.right_abundant
         << "\nleft_adequate: " << rep.left_adequate << '\n';
      for (auto const& gap : rep.witness_gaps) {
        os << "gap " << gap.relation << ':';
        for (auto i : gap.members) {
          os << ' ' << S.at(i);
        }
        os << '\n';
      }
      return pass;
    }
    json tables = json::array();
    for (auto [name, p] : rels) {
      tables.push_back(class_table(name, *p));
    }
    json gaps = json::array();
    for (auto const& gap : rep.witness_gaps) {
      json members = json::array();
      for (auto i : gap.members) {
        members.push_back(odct::to_string(S.at(i)));
      }
      gaps.push_back(json{{"relation", gap.relation}, {"class", members}});
    }
    os << json{{"n", cfg.n},
               {"family", cfg.family},
               {"elements", element_list(S.elements())},
               {"relations", tables},
               {"left_abundant", rep.left_abundant},
               {"right_abundant", rep.right_abundant},
               {"left_adequate", rep.left_adequate},
               {"witness_gaps", gaps}}
              .dump()
       << '\n';
    return pass;
  }

  int cmd_rank(RunConfig const& cfg, std::ostream& os) {
    require_format(cfg, {"json", "text"});
    auto S = odct::make_family(odct::parse_family(cfg.family), cfg.n,
                               cfg.max_filter_n);
    if (cfg.ideal > 0) {
      auto const ladder = odct::rank_ladder(S);
      auto const it     = ladder.ideals.find(cfg.ideal);
      if (it == ladder.ideals.end()) {
        throw odct::invalid_input("--ideal " + std::to_string(cfg.ideal)
                                  + " selects an empty ideal");
      }
      std::vector<odct::ChainMap> elems;
      for (auto i : it->second) {
        elems.push_back(S.at(i));
      }
      S = odct::FiniteSemigroup::from_elements(std::move(elems));
    }
    auto const cert = odct::rank_exact(S);
    json       unique
        = cert.is_unique_minimum ? json(*cert.is_unique_minimum)
                                 : json("unknown");
    if (cfg.format == "text") {
      os << "rank " << cert.generators.size() << '\n';
      for (auto const& g : cert.generators) {
        os << g << '\n';
      }
    } else {
      os << json{{"rank", cert.generators.size()},
                 {"generators", element_list(cert.generators)},
                 {"minimal", cert.is_minimal},
                 {"unique_minimum", unique}}
                .dump()
         << '\n';
    }
    return cert.is_generating && cert.is_minimal ? pass : failure;
  }

  int cmd_order(RunConfig const& cfg, std::ostream& os) {
    require_format(cfg, {"json"});
    auto const f       = odct::parse_family(cfg.family);
    auto const reading = odct::parse_interior_reading(cfg.reading);
    auto const S       = odct::make_family(f, cfg.n, cfg.max_filter_n);
    auto const table   = odct::order_table(S);
    std::vector<bool> related(S.size() * S.size(), false);
    for (auto [x, y] : table) {
      related[x * S.size() + y] = true;
    }
    bool const partial = odct::is_partial_order(table, S.size());

    if (cfg.check == "table") {
      json pairs = json::array();
      for (auto [x, y] : table) {
        pairs.push_back(json::array(
            {odct::to_string(S.at(x)), odct::to_string(S.at(y))}));
      }
      os << json{{"n", cfg.n},
                 {"family", cfg.family},
                 {"pairs", pairs},
                 {"partial_order", partial}}
                .dump()
         << '\n';
      return partial ? pass : failure;
    }
    if (cfg.check != "theorem-vs-definitional") {
      throw odct::invalid_input("unknown --check '" + cfg.check + "'");
    }
    if (f != odct::Family::ODCT && f != odct::Family::OCT) {
      throw odct::invalid_input(
          "theorem-vs-definitional needs --family ODCT or OCT");
    }
    json        pairs        = json::array();
    std::size_t disagreeing  = 0;
    for (std::size_t x = 0; x < S.size(); ++x) {
      for (std::size_t y = 0; y < S.size(); ++y) {
        auto const& a   = S.at(x);
        auto const& b   = S.at(y);
        bool const  def = related[x * S.size() + y];
        bool const  thm = f == odct::Family::ODCT
                              ? odct::leq_odct_theorem(a, b, reading)
                              : odct::leq_oct_theorem(a, b);
        disagreeing += def != thm;
        pairs.push_back(json{{"a", odct::to_string(a)},
                             {"b", odct::to_string(b)},
                             {"definitional", def},
                             {"theorem", thm},
                             {"agree", def == thm}});
      }
    }
    bool const ok = disagreeing == 0 && partial;
    os << json{{"n", cfg.n},
               {"family", cfg.family},
               {"reading", cfg.reading},
               {"pairs", pairs},
               {"disagreements", disagreeing},
               {"partial_order", partial},
               {"verdict", ok ? "agree" : "disagree"}}
              .dump()
       << '\n';
    return ok ? pass : failure;
  }

  int cmd_verify_all(RunConfig const& cfg, std::ostream& os) {
    require_format(cfg, {"json", "text"});
    if (cfg.family != "ODCT") {
      throw odct::invalid_input("verify-all runs the ODCT matrix only");
    }
    odct::VerifyOptions opt;
    opt.n_max        = cfg.n_max;
    opt.max_filter_n = cfg.max_filter_n;
    opt.reading      = odct::parse_interior_reading(cfg.reading);
    auto const results = odct::verify_all(opt);
    bool       all     = true;
    json       checks  = json::array();
    for (auto const& r : results) {
      all = all && r.passed;
      checks.push_back(json{{"name", r.name},
                            {"claim", r.claim},
                            {"passed", r.passed},
                            {"failures", r.failures}});
    }
    if (cfg.format == "text") {
      for (auto const& r : results) {
        os << (r.passed ? "PASS " : "FAIL ") << r.name << '\n';
        for (auto const& f : r.failures) {
          os << "  " << f << '\n';
        }
      }
    } else {
      os << json{{"n_max", cfg.n_max},
                 {"reading", cfg.reading},
                 {"checks", checks},
                 {"passed", all}}
                .dump()
         << '\n';
    }
    return all ? pass : failure;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for contraction-mapping semigroups on a finite chain"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto const positive = CLI::Range(1, std::numeric_limits<int>::max());

  auto add_common = [&cfg, &positive](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "T, CT, OCT, ORCT or ODCT")
        ->capture_default_str();
    sub->add_option("--format", cfg.format, "json, text or csv")
        ->check(CLI::IsMember({"json", "text", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "write the report to this path");
    sub->add_option("--max-filter-n", cfg.max_filter_n,
                    "ceiling for n^n filter enumeration")
        ->check(positive)
        ->capture_default_str();
  };
  auto add_n = [&cfg, &positive](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "chain size")
        ->check(positive)
        ->required();
  };
  auto add_reading = [&cfg](CLI::App* sub) {
    sub->add_option("--corollary59-reading", cfg.reading,
                    "quantifier of the interior-preimage clause on ODCT_n")
        ->check(CLI::IsMember({"forall", "forsome"}))
        ->capture_default_str();
  };

  auto* enumerate = app.add_subcommand(
      "enumerate", "list a family (text by default, or --format json)");
  add_common(enumerate);
  add_n(enumerate);
  auto* relations = app.add_subcommand("relations", "Green's class tables");
  add_common(relations);
  add_n(relations);
  auto* starred = app.add_subcommand("starred", "starred relations, abundance");
  add_common(starred);
  add_n(starred);
  auto* rank = app.add_subcommand("rank", "rank with a generating-set certificate");
  add_common(rank);
  add_n(rank);
  rank->add_option("--ideal", cfg.ideal,
                   "restrict to the ideal of elements of rank <= p")
      ->check(positive);
  auto* order = app.add_subcommand("order", "natural partial order checks");
  add_common(order);
  add_n(order);
  add_reading(order);
  order->add_option("--check", cfg.check, "theorem-vs-definitional or table")
      ->check(CLI::IsMember({"theorem-vs-definitional", "table"}))
      ->capture_default_str();
  auto* verify = app.add_subcommand("verify-all", "run every check");
  add_common(verify);
  add_reading(verify);
  verify->add_option("--n-max", cfg.n_max, "largest chain size")
      ->check(positive)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? pass : usage;
  }
  // A bare listing reads best one map per line.
  if (*enumerate && enumerate->get_option("--format")->count() == 0) {
    cfg.format = "text";
  }

  std::ostringstream report;
  int                status = pass;
  try {
    if (*enumerate) {
      status = cmd_enumerate(cfg, report);
    } else if (*relations) {
      status = cmd_relations(cfg, report);
    } else if (*starred) {
      status = cmd_starred(cfg, report);
    } else if (*rank) {
      status = cmd_rank(cfg, report);
    } else if (*order) {
      status = cmd_order(cfg, report);
    } else {
      status = cmd_verify_all(cfg, report);
    }
  } catch (odct::capacity_error const& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return capacity;
  } catch (odct::invalid_input const& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return usage;
  } catch (odct::scope_error const& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return usage;
  }

  if (cfg.out.empty()) {
    std::cout << report.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      std::cerr << "usage: cannot open " << cfg.out << '\n';
      return usage;
    }
    file << report.str();
  }
  return status;
}
