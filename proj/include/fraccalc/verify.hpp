#ifndef FRACCALC_VERIFY_HPP
#define FRACCALC_VERIFY_HPP

#include <string>
#include <vector>

namespace fraccalc::verify {

struct CriterionResult {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0; // pass numerically means measured <= threshold
    bool pass = false;
    bool report_only = false;
    std::string detail;
};

/// Run the verification suite at grid size n (default 4096 on [0,1]).
/// `only` filters criteria by substring match on the name; empty runs all.
std::vector<CriterionResult> run_all(int n = 4096, const std::string& only = "");

/// "[PASS] 03-heaviside-norm measured=1.2e-10 (<= 1e-08) ..." one-liner.
std::string format_line(const CriterionResult& r);

} // namespace fraccalc::verify

#endif
