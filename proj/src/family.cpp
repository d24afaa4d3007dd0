#include "odct/family.hpp"

#include <algorithm>
#include <string>

#include "odct/error.hpp"

namespace odct {

  std::vector<ChainMap> enumerate_filtered(FamilySpec spec, int max_n) {
    if (spec.n < 1) {
      throw invalid_input("enumerate_filtered: n must be positive");
    }
    if (spec.n > max_n) {
      throw capacity_error("enumerate_filtered: n = " + std::to_string(spec.n)
                           + " exceeds the filter ceiling max-filter-n = "
                           + std::to_string(max_n));
    }
    std::size_t const     n = static_cast<std::size_t>(spec.n);
    std::vector<int>      images(n, 1);
    std::vector<ChainMap> out;
    // Odometer with the last point varying fastest gives lexicographic order.
    while (true) {
      ChainMap a(images);
      if (belongs_to(a, spec.family)) {
        out.push_back(std::move(a));
      }
      std::size_t i = n;
      while (i > 0 && images[i - 1] == spec.n) {
        images[i - 1] = 1;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++images[i - 1];
    }
    return out;
  }

  std::vector<ChainMap> enumerate_odct_direct(int n, int max_n) {
    if (n < 1) {
      throw invalid_input("enumerate_odct_direct: n must be positive");
    }
    if (n > max_n) {
      throw capacity_error("enumerate_odct_direct: n = " + std::to_string(n)
                           + " exceeds the direct ceiling "
                           + std::to_string(max_n));
    }
    std::vector<ChainMap> out;
    out.reserve(std::size_t{1} << (n - 1));
    // Bit k of cut set means a new block starts at point k + 2.
    for (unsigned long cuts = 0; cuts < (1UL << (n - 1)); ++cuts) {
      std::vector<int> images(static_cast<std::size_t>(n));
      int              block = 1;
      images[0]              = 1;
      for (int x = 2; x <= n; ++x) {
        if ((cuts >> (x - 2)) & 1UL) {
          ++block;
        }
        images[static_cast<std::size_t>(x - 1)] = block;
      }
      out.emplace_back(std::move(images));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ChainMap idempotent_odct(int n, int p) {
    if (n < 1 || p < 1 || p > n) {
      throw invalid_input("idempotent_odct: need 1 <= p <= n, got n = "
                          + std::to_string(n) + ", p = " + std::to_string(p));
    }
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
      images[static_cast<std::size_t>(x - 1)] = std::min(x, p);
    }
    return ChainMap(std::move(images));
  }

  bool is_orct_idempotent_form(ChainMap const& a) {
    if (!belongs_to(a, Family::ORCT)) {
      throw scope_error("is_orct_idempotent_form: " + to_string(a)
                        + " is not in ORCT_n");
    }
    auto const im = a.image_set();
    int const  lo = im.front();
    int const  hi = im.back();
    for (int x = 1; x <= a.degree(); ++x) {
      if (a(x) != std::clamp(x, lo, hi)) {
        return false;
      }
    }
    return true;
  }

}  // namespace odct
