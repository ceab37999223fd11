#ifndef STACKINGS_REPORT_HPP
#define STACKINGS_REPORT_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace stackings {

// One condition failure found by a checker. `code` is a short stable tag
// ("GS.low", "BS.4", "IS.7", ...) so reports can be filtered mechanically;
// `detail` names the offending cells.
struct Violation {
  std::string code;
  std::string detail;
};

// Checker outcome. `violations` are definite failures; `horizon` items are
// obligations that could not be fully examined because the data is a
// truncated ball (a translate or a star leaves the available cells).
// A report with no violations but nonempty horizon means "holds as far as
// the ball can tell".
struct Report {
  std::vector<Violation> violations;
  std::vector<Violation> horizon;

  bool ok() const { return violations.empty(); }

  void add(std::string code, std::string detail) {
    violations.push_back({std::move(code), std::move(detail)});
  }
  void note_horizon(std::string code, std::string detail) {
    horizon.push_back({std::move(code), std::move(detail)});
  }
  void merge(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    horizon.insert(horizon.end(), other.horizon.begin(), other.horizon.end());
  }
};

// Input data is structurally broken (bad JSON shape, dangling ids,
// non-closed boundary words, ...). CLI maps this to exit 2.
struct malformed_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The computation needs information outside the available ball
// (no complete lift of a quotient cell, comparison leaves the ball, ...).
// CLI maps this to exit 3.
struct horizon_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two ball charts over the same quotient cell disagree, so the quotient
// structure cannot be read off the truncation. CLI maps this to exit 3.
struct descent_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace stackings

#endif
