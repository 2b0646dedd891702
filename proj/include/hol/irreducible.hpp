#ifndef HOL_IRREDUCIBLE_HPP
#define HOL_IRREDUCIBLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hol/unipoly.hpp"

namespace hol {

enum class Verdict { Irreducible, Reducible, Inconclusive };

/*
 * Certificate-based irreducibility over Q. The verdicts Irreducible and
 * Reducible always carry a checkable witness:
 *   - a prime whose reduction is irreducible,
 *   - or the surviving degree set {0, n} of the mod-p subset-sum sieve,
 *   - or a nontrivial rational factor,
 *   - or, for fields constructed by theory (cyclotomic polynomials, minimal
 *     polynomials), a structural reason.
 */
struct IrreducibilityCertificate {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<uint64_t> prime_witness;
    std::optional<UniPoly> factor_witness;
    std::vector<int> surviving_degrees;   // subset sums still alive after sampling
    std::vector<uint64_t> primes_used;
    std::string structural;               // nonempty for structural certificates

    std::string describe() const;

    static IrreducibilityCertificate structural_certificate(const std::string& reason);
};

// Samples up to prime_budget primes not dividing lc(f)*disc(f); combines the
// prime-witness route with the degree sieve. Reducible only via an explicit
// factor (rational root or repeated factor); the sieve can only prove
// irreducibility.
IrreducibilityCertificate certify_irreducible_over_q(const UniPoly& f, int prime_budget = 64);

}  // namespace hol

#endif
