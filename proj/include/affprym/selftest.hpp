#ifndef AFFPRYM_SELFTEST_HPP
#define AFFPRYM_SELFTEST_HPP

#include <string>
#include <vector>

#include "affprym/group.hpp"

namespace affprym::selftest {

struct CheckResult {
    std::string name;
    bool pass = false;
    double ms = 0.0;
    std::string detail;
};

struct Options {
    int sweep_g = 1;
    int sweep_s = 4;
    long long budget = 10'000'000;
    bool parallel = true;
    int trials = 500;  // random generated-subgroup trials
};

/// Full invariant suite for one q: oracle-vs-closed-form comparisons across
/// every module, ending with the theorem sweep.
std::vector<CheckResult> run_for_q(const group::AffGroup& G, const Options& opt);

} // namespace affprym::selftest

#endif
