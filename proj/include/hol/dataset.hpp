#ifndef HOL_DATASET_HPP
#define HOL_DATASET_HPP

#include <optional>
#include <string>
#include <vector>

#include "hol/jsonio.hpp"
#include "hol/orbits.hpp"

namespace hol {

/*
 * Dataset wire format (integers and "p/q" strings only):
 * {
 *   "base_field": {"poly": [...]},
 *   "galois_generators": [{"name": "...", "image": {...}}],
 *   "supported_primes": [2, 3, ...],
 *   "constituents": [{"label", "dim", "coeff_field", "aut_generators",
 *                     "atkin_lehner", "eigenvalues": {"<label>": element}}],
 *   "identities": [{"sigma_word", "from", "to", "tau_image" | null}]
 * }
 */
struct Dataset {
    NumberField base_field;
    std::vector<NFAutomorphism> galois_generators;  // named
    std::vector<uint64_t> supported_primes;
    std::vector<EigensystemRecord> records;

    struct Identity {
        std::string sigma_word;
        std::string from, to;
        std::optional<NFElement> tau_image;  // in the coefficient field of `from`
    };
    std::vector<Identity> identities;

    GaloisSetup setup(uint64_t seed = 42) const;
};

Dataset dataset_from_json(const json& j);
json dataset_to_json(const Dataset& d);

/*
 * The bundled example: weight-2 level-q eigensystems over Q(zeta_32)^+ with
 * five constituents f, f', g, g', h whose synthetic eigenvalues encode the
 * orbit identities sigma(f) = f', sigma^2(f) = f^tau_f (likewise for g) and
 * sigma(h) = h^tau_h, with Atkin-Lehner signs -,-,-,-,+ and dimensions
 * 4,4,4,4,24. Deterministic: the same JSON bytes on every run.
 */
Dataset generate_example_dataset();

// group element index named by a word like "1", "sigma", "sigma^3"
int group_element_by_word(const AutGroup& g, const std::string& word);

}  // namespace hol

#endif
