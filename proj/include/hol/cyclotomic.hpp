#ifndef HOL_CYCLOTOMIC_HPP
#define HOL_CYCLOTOMIC_HPP

#include <memory>
#include <utility>

#include "hol/numberfield.hpp"

namespace hol {

// exact n-th cyclotomic polynomial by recursive division of x^n - 1
UniPoly cyclotomic_poly(unsigned n);

/*
 * Q(zeta_n) with its Galois maps zeta -> zeta^k indexed by (Z/n)^*, the
 * maximal real subfield Q(zeta_n + zeta_n^{-1}), and restriction of Galois
 * maps to it. The real-subfield change of basis is cached per field.
 */
class CyclotomicField {
  public:
    explicit CyclotomicField(unsigned n);  // n >= 3

    unsigned conductor() const { return n_; }
    unsigned degree() const;  // phi(n)
    const NumberField& field() const;
    NFElement zeta() const { return field().gen(); }

    // zeta -> zeta^k, gcd(k, n) = 1 (NotCoprime otherwise)
    NFAutomorphism galois_map(uint64_t k) const;

    // minimal polynomial of zeta + zeta^{-1} (degree phi(n)/2) and the
    // element zeta + zeta^{-1} itself; requires n >= 5
    std::pair<NumberField, NFElement> real_subfield() const;

    // the automorphism of the real subfield sending zeta+zeta^{-1} to
    // zeta^k + zeta^{-k}
    NFAutomorphism restrict_to_real(uint64_t k) const;

    // search helper: the least k coprime to n whose real restriction equals
    // the given automorphism of the real subfield; 0 when none matches
    uint64_t matching_real_restriction(const NFAutomorphism& target) const;

  private:
    struct Cache;
    unsigned n_;
    std::shared_ptr<Cache> cache_;
};

struct BetaIdentityReport {
    bool identity_holds;        // beta^2 = -2 - alpha with beta = i(zeta+zeta^{-1})
    bool sign_variant_differs;  // (zeta+zeta^{-1})^2 does NOT equal -2 - alpha
    int beta_degree;            // [Q(beta) : Q]
};

// works inside Q(zeta_64) with i = zeta^16, alpha = zeta^2 + zeta^{-2}
BetaIdentityReport beta_identity_report();

// the headline check: beta^2 = -2 - alpha, exactly
bool check_beta_identity();

}  // namespace hol

#endif
