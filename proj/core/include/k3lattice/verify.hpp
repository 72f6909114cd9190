#pragma once

#include <map>
#include <string>
#include <vector>

#include "k3lattice/cases.hpp"

namespace k3l {

inline constexpr const char* kVersion = "k3lattice 1.0.0";

struct CheckResult {
    std::string name;
    std::string location;  // label of the source statement, e.g. "Thm 2.1(3)"
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct Report {
    std::string version;
    std::vector<CheckResult> checks;
    int passed = 0;
    int failed = 0;
};

/// Reference tables the checks compare against. The defaults are the built-in
/// M1..M6 and inverses; a fixtures directory may override them with files
/// M1.txt .. M6.txt and M1_inv.txt .. M6_inv.txt in the matrix text format.
struct Fixtures {
    std::map<CaseId, ExactMatrix> gram;
    std::map<CaseId, ExactMatrix> gram_inv;

    static Fixtures builtin();
    static Fixtures load(const std::string& dir);
};

/// Runs every check in the fixed declared order. Construction failures throw;
/// check failures are reported in the result.
Report run_verify_all(const Fixtures& fixtures = Fixtures::builtin());

std::string render_text(const Report& r);
std::string render_json(const Report& r);

}  // namespace k3l
