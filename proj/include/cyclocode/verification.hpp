#pragma once

#include <string>
#include <vector>

#include "cyclocode/numtheory.hpp"

namespace cyclocode {

enum class check_status { ok, fail, skipped };

struct check_result {
    std::string name;
    check_status status;
    std::string detail;  // counterexample on failure, reason when skipped
};

// Runs the full oracle suite for one parameter set: class partition
// structure, closed-form tables against brute-force counts, shifted-count
// closed forms, parity conditions, and (when ord_n(p) fits the cap) the
// extension-tower checks plus the classification/gcd cross-validation.
std::vector<check_result> run_verification(u64 n1, u64 n2, u32 p, u64 m_cap);

bool all_passed(const std::vector<check_result>& results);
const check_result* first_failure(const std::vector<check_result>& results);

}  // namespace cyclocode
