#ifndef HOL_IDEALS_HPP
#define HOL_IDEALS_HPP

#include <string>
#include <vector>

#include "hol/finfield.hpp"
#include "hol/numberfield.hpp"

namespace hol {

/*
 * A prime of Z[theta] above p, written (p, g(theta)) with g monic irreducible
 * mod p; e is the ramification index and f = deg g the residue degree.
 * Factorizations carry canonical labels "p.i" with the factors sorted
 * lexicographically by the coefficient sequence of g.
 */
struct PrimeIdeal {
    uint64_t p = 0;
    FpPoly g;
    int e = 0;
    int f = 0;
    std::string label;

    FinField residue_field() const { return f == 1 ? FinField(p) : FinField(p, g); }
};

struct FactoredPrime {
    uint64_t p = 0;
    NumberField field;
    std::vector<PrimeIdeal> factors;  // canonical order, labels "p.1", "p.2", ...

    const PrimeIdeal& by_label(const std::string& label) const;
};

// p divides every non-leading coefficient and p^2 does not divide the
// constant term; f monic integral
bool is_eisenstein(const UniPoly& f, uint64_t p);

/*
 * Factors p in Z[theta] after certifying p-maximality with the Dedekind
 * criterion; Eisenstein polynomials shortcut to the single totally ramified
 * prime (p, theta). Throws IndexDivisor when p divides [O_K : Z[theta]] and
 * the factorization shape is undetermined at this order.
 */
FactoredPrime dedekind_factor(const NumberField& K, uint64_t p, uint64_t seed = 42);

// the image a(P) among ctx.factors; a must be an automorphism of ctx.field
PrimeIdeal galois_act_prime(const NFAutomorphism& a, const PrimeIdeal& P, const FactoredPrime& ctx);

// image of x under Z[theta] -> Z[theta]/(p, g(theta)) = F_{p^f}; coordinates
// must be p-integral
FqElem residue_reduce(const NFElement& x, const PrimeIdeal& P);

}  // namespace hol

#endif
