#ifndef HOL_ORBITS_HPP
#define HOL_ORBITS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hol/ideals.hpp"
#include "hol/numberfield.hpp"

namespace hol {

/*
 * A newform modeled by its eigenvalue system: a finitely supported map from
 * prime-ideal labels of the base field to elements of the coefficient field,
 * together with the group of coefficient-field automorphisms generated by
 * the supplied (verified) generators. At least one stored eigenvalue must
 * generate the coefficient field.
 */
struct EigensystemRecord {
    std::string label;
    NumberField coeff_field;
    int weight = 2;
    bool trivial_character = true;
    std::map<std::string, NFElement> eigenvalues;
    std::optional<int> atkin_lehner;
    std::vector<NFAutomorphism> aut_generators;
    int dim = 0;  // constituent dimension; equals the coefficient-field degree here

    std::string generator_label;  // label whose eigenvalue generates coeff_field

    // locates an eigenvalue of full degree and records its label
    void find_generator_eigenvalue();
    const AutGroup& aut_group() const;  // generated by aut_generators; cached

  private:
    mutable std::shared_ptr<const AutGroup> aut_cache_;
};

/*
 * The Galois side: base field F, a group G of verified automorphisms, the
 * factorizations of the supported rational primes, and the permutation each
 * group element induces on the prime labels.
 */
struct GaloisSetup {
    NumberField base_field;
    AutGroup group;
    std::map<uint64_t, FactoredPrime> prime_tables;
    std::vector<std::map<std::string, std::string>> prime_action;  // [group index][label]

    static GaloisSetup build(const NumberField& F, const AutGroup& G,
                             const std::vector<uint64_t>& primes, uint64_t seed = 42);

    const std::string& act(int group_index, const std::string& label) const;
    std::vector<std::string> all_labels() const;  // sorted
};

// a_l(sigma r) := a_{sigma(l)}(r); same coefficient field
EigensystemRecord inner_conjugate(const EigensystemRecord& r, int group_index,
                                  const GaloisSetup& setup);

// a_l(r^tau) := tau(a_l(r))
EigensystemRecord exterior_twist(const EigensystemRecord& r, const NFAutomorphism& tau);

// exact equality of the stored eigenvalue maps
bool records_equal(const EigensystemRecord& r, const EigensystemRecord& s);

// the unique tau in Aut(L) with s = r^tau, if any; both records must share
// the coefficient field
std::optional<NFAutomorphism> match_up_to_twist(const EigensystemRecord& r,
                                               const EigensystemRecord& s);

/*
 * Hecke orbit [r]: records modulo exterior twists by Aut(L). The canonical
 * representative minimizes the generator eigenvalue's coordinate vector
 * among all twists.
 */
struct OrbitClass {
    EigensystemRecord representative;
    static OrbitClass of(const EigensystemRecord& r);
    bool contains(const EigensystemRecord& s) const;
};

/*
 * The G-action on the orbit classes of the given records. Records must be
 * pairwise non-matching up to twist; every conjugate must match some record
 * (OrphanOrbit otherwise). The table is verified to be a group action.
 */
struct OrbitAction {
    std::vector<std::string> labels;
    std::vector<std::map<std::string, std::string>> table;  // [group index][record label]
    std::vector<std::vector<std::string>> orbits;            // partition, each sorted
    std::map<std::string, int> stabilizer_order;

    const std::vector<std::string>& orbit_of(const std::string& label) const;
};

OrbitAction orbit_action(const GaloisSetup& setup, const std::vector<EigensystemRecord>& records);

struct DescentPrediction {
    UniPoly base_field_poly;   // E' = F^{G'}
    int dimension = 0;         // [L : Q]
    UniPoly endo_field_poly;   // K = L^Delta
};

struct PhiReport {
    std::string label;
    std::vector<int> stabilizer;              // indices into setup.group
    std::vector<std::string> stabilizer_names;
    std::vector<std::pair<int, NFAutomorphism>> images;  // phi(sigma) per stabilizer element
    bool injective = false;
    int delta_order = 0;
    UniPoly fixed_field_poly;  // K = L^Delta
    DescentPrediction descent;
    bool base_change = false;
};

/*
 * Stabilizer of [r], the homomorphism phi into Aut(L) (HomomorphismViolation
 * if the data is inconsistent), its image Delta, the fixed field K = L^Delta
 * and the descent prediction (E', dim, K).
 */
PhiReport phi_analysis(const GaloisSetup& setup, const std::vector<EigensystemRecord>& records,
                       const std::string& label);

// true iff every group element fixes r exactly on all stored primes
bool is_base_change(const GaloisSetup& setup, const EigensystemRecord& r);

struct SpaceSummary {
    long group_order = 0;
    struct Constituent {
        std::string label;
        int dim = 0;
        std::optional<int> atkin_lehner;
    };
    std::vector<Constituent> constituents;
    std::vector<std::vector<std::string>> orbit_partition;

    long orbit_size_of(const std::string& label) const;
};

struct CorollaryFinding {
    std::string corollary;  // "3.4", "3.5", "3.6" style tags are NOT used; see flag
    std::string label;
    std::string flag;       // MUST_BE_BASE_CHANGE_FROM_INTERMEDIATE, DATA_INCONSISTENT, ...
    std::string detail;
};

/*
 * Combinatorial consequences of the stabilizer bookkeeping:
 *  - unique constituent of its dimension with d < |G| must be a base change
 *    from an intermediate field;
 *  - the count n of constituents of dimension d satisfies n >= |G|/s;
 *  - when gcd(d, |G|) = 1, n must be 1 (base change) or |G| (full orbit).
 */
std::vector<CorollaryFinding> corollary_suite(const SpaceSummary& s);

// (total genus, quotient genus): total = sum of dims; quotient = sum over
// constituents with Atkin-Lehner eigenvalue -1 (the +1 eigenspace of -w)
std::pair<long, long> genus_bookkeeping(const SpaceSummary& s);

// pointwise residue reduction of all eigenvalues at a prime P of the
// coefficient field
std::map<std::string, FqElem> eigensystem_mod_prime(const EigensystemRecord& r, const PrimeIdeal& P);

// j in [0, f) with m2 = m1^{p^j} pointwise, if any ("equal up to a Frobenius
// power of the residue field")
std::optional<int> mod_systems_frobenius_match(const FinField& residue,
                                               const std::map<std::string, FqElem>& m1,
                                               const std::map<std::string, FqElem>& m2);

}  // namespace hol

#endif
