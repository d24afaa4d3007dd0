#pragma once

#include <string>
#include <vector>

#include "odct/family.hpp"
#include "odct/natural_order.hpp"

namespace odct {

  struct CheckResult {
    std::string              name;
    std::string              claim;
    bool                     passed = true;
    std::vector<std::string> failures;  // one line per witnessing failure
  };

  struct VerifyOptions {
    int             n_max        = 5;
    int             max_filter_n = default_max_filter_n;
    InteriorReading reading      = InteriorReading::for_all;
  };

  /// Runs the whole ODCT_n check matrix with every size range clipped to
  /// [1, n_max] (the fixed n = 10 worked example always runs). Results are
  /// ordered by check name.
  std::vector<CheckResult> verify_all(VerifyOptions const& options);

  /// A family as a FiniteSemigroup. ODCT_n comes from the composition
  /// generator once n exceeds max_filter_n; the other families are filtered.
  FiniteSemigroup make_family(Family f, int n,
                              int max_filter_n = default_max_filter_n);

}  // namespace odct
