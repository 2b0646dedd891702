#ifndef HOL_CERTIFY_HPP
#define HOL_CERTIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "hol/permgroup.hpp"
#include "hol/unipoly.hpp"

namespace hol {

struct SampleCounts {
    std::map<CycleType, long> counts;
    long primes_sampled = 0;
    uint64_t max_prime = 0;
    uint64_t seed = 0;
};

/*
 * Frobenius cycle types of f over all primes p <= max_prime not dividing
 * disc(f) (nor lc(f)): the degree multiset of f mod p. Reductions are
 * squarefree at such primes, so distinct-degree splitting determines the
 * multiset exactly; the result is deterministic in (f, max_prime).
 */
SampleCounts frobenius_sample(const UniPoly& f, uint64_t max_prime, uint64_t seed);

struct DiscAnalysis {
    Int disc;           // exact disc(f), an integer for integral f
    long v2;            // 2-adic valuation of |disc|
    Int odd_cofactor;   // |disc| / 2^v2
    bool odd_is_square;
};

DiscAnalysis analyze_discriminant(const UniPoly& f);

struct CertTypeRow {
    CycleType type;
    long observed = 0;          // sampled primes with this type
    long candidate_count = 0;   // group elements with this type (0 = foreign)
    Rat expected_density;       // candidate_count / |G|
    Rat observed_frequency;
    Rat abs_deviation;
};

/*
 * Statistical certification of "Gal(splitting field) = candidate" by cycle
 * type sampling against Chebotarev densities, plus the exact exclusions the
 * observations license. The verdict is CONTRADICTED exactly when an observed
 * type is outside the candidate's table; it is never a proof.
 */
struct CertReport {
    UniPoly poly;
    std::string group_name;
    long group_order = 0;
    uint32_t group_degree = 0;
    uint64_t max_prime = 0;
    uint64_t seed = 0;
    Rat tolerance;

    long primes_sampled = 0;
    std::vector<CertTypeRow> rows;  // candidate types first, then foreign observed types
    bool all_candidate_types_observed = false;
    Rat max_abs_deviation;
    bool within_tolerance = false;
    std::vector<std::string> notes;
    std::string verdict;  // "CONSISTENT" or "CONTRADICTED"
    DiscAnalysis disc;

    std::string to_text() const;
};

CertReport certify_group(const UniPoly& f, const GroupModel& candidate, uint64_t max_prime,
                         uint64_t seed, const Rat& tolerance = Rat(1, 50));

}  // namespace hol

#endif
