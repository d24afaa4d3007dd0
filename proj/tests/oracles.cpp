#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace oracle {

  Map compose(Map const& a, Map const& b) {
    if (a.size() != b.size()) {
      throw std::logic_error("oracle::compose: size mismatch");
    }
    Map out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i] = b[static_cast<std::size_t>(a[i] - 1)];
    }
    return out;
  }

  Map identity(int n) {
    Map out;
    for (int i = 1; i <= n; ++i) {
      out.push_back(i);
    }
    return out;
  }

  bool order_preserving(Map const& a) {
    return std::is_sorted(a.begin(), a.end());
  }

  bool order_reversing(Map const& a) {
    return std::is_sorted(a.rbegin(), a.rend());
  }

  bool order_decreasing(Map const& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > static_cast<int>(i) + 1) {
        return false;
      }
    }
    return true;
  }

  // |a(x+1) - a(x)| <= 1 for each x; the triangle inequality carries this to
  // every pair.
  bool contraction(Map const& a) {
    for (std::size_t i = 1; i < a.size(); ++i) {
      if (std::abs(a[i] - a[i - 1]) > 1) {
        return false;
      }
    }
    return true;
  }

  namespace {
    bool in_family(Map const& a, std::string const& name) {
      if (name == "T") {
        return true;
      }
      if (!contraction(a)) {
        return false;
      }
      if (name == "CT") {
        return true;
      }
      if (name == "ORCT") {
        return order_preserving(a) || order_reversing(a);
      }
      if (name == "OCT") {
        return order_preserving(a);
      }
      if (name == "ODCT") {
        return order_preserving(a) && order_decreasing(a);
      }
      throw std::logic_error("oracle::family: unknown family " + name);
    }
  }  // namespace

  std::vector<Map> family(int n, std::string const& name) {
    std::vector<Map>          out;
    Map                       cur;
    std::function<void()> rec = [&] {
      if (static_cast<int>(cur.size()) == n) {
        if (in_family(cur, name)) {
          out.push_back(cur);
        }
        return;
      }
      for (int v = 1; v <= n; ++v) {
        cur.push_back(v);
        rec();
        cur.pop_back();
      }
    };
    rec();
    return out;
  }

  std::vector<Map> odct_by_compositions(int n) {
    if (n == 1) {
      return {{1}};
    }
    // Extending a map on [n-1] by one point: it either joins the last block
    // or opens a new one.
    std::vector<Map> out;
    for (Map const& m : odct_by_compositions(n - 1)) {
      Map same = m;
      same.push_back(m.back());
      out.push_back(same);
      Map fresh = m;
      fresh.push_back(m.back() + 1);
      out.push_back(fresh);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Map> oct_structural(int n) {
    std::vector<Map> out;
    for (Map const& d : odct_by_compositions(n)) {
      int const p = d.back();
      for (int offset = 0; offset + p <= n; ++offset) {
        Map shifted = d;
        for (int& v : shifted) {
          v += offset;
        }
        out.push_back(shifted);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Map> closure(std::vector<Map> const& gens) {
    std::set<Map> cur(gens.begin(), gens.end());
    while (true) {
      std::set<Map> next = cur;
      for (Map const& a : cur) {
        for (Map const& b : cur) {
          next.insert(compose(a, b));
        }
      }
      if (next.size() == cur.size()) {
        return {cur.begin(), cur.end()};
      }
      cur = std::move(next);
    }
  }

  std::vector<Map> MonoidView::with_one() const {
    std::vector<Map> out = elems;
    out.push_back(identity(n));
    return out;
  }

  std::set<Map> left_ideal(MonoidView const& S, Map const& a) {
    std::set<Map> out;
    for (Map const& s : S.with_one()) {
      out.insert(compose(s, a));
    }
    return out;
  }

  std::set<Map> right_ideal(MonoidView const& S, Map const& a) {
    std::set<Map> out;
    for (Map const& s : S.with_one()) {
      out.insert(compose(a, s));
    }
    return out;
  }

  std::set<Map> two_sided_ideal(MonoidView const& S, Map const& a) {
    std::set<Map> out;
    auto const    one = S.with_one();
    for (Map const& l : one) {
      for (Map const& r : one) {
        out.insert(compose(compose(l, a), r));
      }
    }
    return out;
  }

  bool lstar(MonoidView const& S, Map const& a, Map const& b) {
    auto const one = S.with_one();
    for (Map const& m : one) {
      for (Map const& l : one) {
        bool const lhs = compose(a, m) == compose(a, l);
        bool const rhs = compose(b, m) == compose(b, l);
        if (lhs != rhs) {
          return false;
        }
      }
    }
    return true;
  }

  bool rstar(MonoidView const& S, Map const& a, Map const& b) {
    auto const one = S.with_one();
    for (Map const& m : one) {
      for (Map const& l : one) {
        bool const lhs = compose(m, a) == compose(l, a);
        bool const rhs = compose(m, b) == compose(l, b);
        if (lhs != rhs) {
          return false;
        }
      }
    }
    return true;
  }

  bool natural_leq(MonoidView const& S, Map const& a, Map const& b) {
    auto const one = S.with_one();
    for (Map const& l : one) {
      if (compose(l, b) != a) {
        continue;
      }
      for (Map const& m : one) {
        if (compose(b, m) == a && compose(a, m) == a) {
          return true;
        }
      }
    }
    return false;
  }

  bool regular(MonoidView const& S, Map const& a) {
    return std::any_of(S.elems.begin(), S.elems.end(), [&](Map const& g) {
      return compose(compose(a, g), a) == a;
    });
  }

}  // namespace oracle
