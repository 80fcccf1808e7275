#ifndef WV_VERIFY_HPP
#define WV_VERIFY_HPP

#include <string>
#include <vector>

namespace wv {

// One verified claim: a symbolic identity, an exact search result, or a
// numeric oracle with a pinned tolerance.
struct ClaimResult {
  std::string id;
  std::string system;   // "main", "pot1.l1", ..., "tws"
  std::string kind;     // "symmetry" | "conslaw" | "multiplier" | "shock"
  bool pass = false;
  std::string detail;   // residual summary
  std::string samples;  // parameter samples used, empty for symbolic claims
};

struct VerifyOptions {
  std::string system;        // empty: every system
  bool symmetries = true;
  bool laws = true;          // conservation laws and multiplier searches
  bool shock = true;
  bool search = true;        // include the (slower) ansatz searches

  // Negative controls: deliberately break one input and expect FAIL rows.
  bool mutate_flux_sign = false;       // flips the sign of the mass-rate flux
  bool mutate_characteristic = false;  // perturbs the time-shift symmetry
};

std::vector<ClaimResult> run_verification(const VerifyOptions& opt);

// Plain-text matrix, one row per claim. Deterministic given the results.
std::string format_report(const std::vector<ClaimResult>& results);
// CSV with header id,system,kind,status,detail,samples.
std::string format_csv(const std::vector<ClaimResult>& results);

inline bool all_pass(const std::vector<ClaimResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace wv

#endif
