#ifndef HOL_VERIFY_HPP
#define HOL_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hol/dataset.hpp"
#include "hol/jsonio.hpp"

namespace hol {

/*
 * Named checks over the bundled example: field-theoretic facts, the orbit
 * pipeline, and the degree-17 two-torsion certification. Statuses:
 *   PASS / FAIL      recomputed and compared
 *   SKIP             not run (reason in details)
 *   ASSERTED_DATA    quoted input data that is not recomputable here
 */
struct Check {
    std::string id;
    std::string description;
    std::string status;
    std::string details;
    std::string anchor;  // short tag naming the claim the check pins down
};

struct VerifyOptions {
    std::string section = "all";  // fields | orbits | f17 | all
    uint64_t max_prime = 100000;
    uint64_t seed = 42;
    Rat tolerance = Rat(1, 50);
    std::optional<std::string> dataset_path;  // default: the built-in generator
};

struct VerificationReport {
    std::vector<Check> checks;
    uint64_t seed = 0;
    std::string version;

    long count(const std::string& status) const;
    int exit_code() const;  // 1 when any FAIL is present
    json to_json() const;
    std::string to_text() const;
};

VerificationReport run_verification(const VerifyOptions& opts);

extern const char* const kToolVersion;

// Elkies' degree-17 polynomial (ascending coefficients), the two-torsion
// field generator certified in the f17 section
UniPoly elkies_h17();

}  // namespace hol

#endif
