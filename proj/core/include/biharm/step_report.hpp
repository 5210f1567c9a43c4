#ifndef BIHARM_STEP_REPORT_HPP
#define BIHARM_STEP_REPORT_HPP

#include <string>
#include <vector>

namespace biharm {

// Outcome of a single verification step: the claim, its source anchor in
// the derivation chain, and the reduced witness ("0" on success, the
// offending polynomial otherwise).
struct StepReport {
  std::string name;
  std::string claim;
  std::string anchor;
  std::string witness;
  bool verified = false;
  // non-fatal observations, e.g. textual mismatch of a printed
  // intermediate that was re-derived from base rules
  std::vector<std::string> flags;
  // logged uses of nonvanishing assumptions (each division by an assumed
  // nonzero factor is recorded here)
  std::vector<std::string> divisions;

  static StepReport pass(std::string name, std::string claim, std::string anchor,
                         std::string witness = "0") {
    StepReport r;
    r.name = std::move(name);
    r.claim = std::move(claim);
    r.anchor = std::move(anchor);
    r.witness = std::move(witness);
    r.verified = true;
    return r;
  }

  static StepReport fail(std::string name, std::string claim, std::string anchor,
                         std::string witness) {
    StepReport r = pass(std::move(name), std::move(claim), std::move(anchor),
                        std::move(witness));
    r.verified = false;
    return r;
  }
};

// Ordered list of step reports with an overall conclusion; verified iff
// every step verified.
struct Certificate {
  std::string name;
  std::vector<StepReport> steps;
  std::string conclusion;

  bool verified() const {
    for (const auto& s : steps)
      if (!s.verified) return false;
    return true;
  }

  void add(StepReport step) { steps.push_back(std::move(step)); }
};

}  // namespace biharm

#endif
