#include "hol/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hol/errors.hpp"

namespace hol {

void EigensystemRecord::find_generator_eigenvalue() {
    int n = coeff_field.degree();
    for (const auto& [l, v] : eigenvalues) {
        if (v.minimal_polynomial().degree() == n) {
            generator_label = l;
            return;
        }
    }
    fail(Err::SchemaViolation, "record " + label + ": no stored eigenvalue generates the coefficient field");
}

const AutGroup& EigensystemRecord::aut_group() const {
    if (!aut_cache_)
        aut_cache_ = std::make_shared<const AutGroup>(AutGroup::generate(coeff_field, aut_generators));
    return *aut_cache_;
}

GaloisSetup GaloisSetup::build(const NumberField& F, const AutGroup& G,
                               const std::vector<uint64_t>& primes, uint64_t seed) {
    GaloisSetup s{F, G, {}, {}};
    for (uint64_t p : primes) s.prime_tables.emplace(p, dedekind_factor(F, p, seed));
    s.prime_action.resize(G.size());
    for (int gi = 0; gi < G.size(); ++gi) {
        for (const auto& [p, fp] : s.prime_tables) {
            for (const PrimeIdeal& P : fp.factors)
                s.prime_action[gi][P.label] = galois_act_prime(G.at(gi), P, fp).label;
        }
    }
    // the permutations must respect the multiplication table
    for (int i = 0; i < G.size(); ++i)
        for (int j = 0; j < G.size(); ++j) {
            int ij = G.mult(i, j);
            for (const auto& [l, _] : s.prime_action[0]) {
                if (s.prime_action[ij].at(l) != s.prime_action[i].at(s.prime_action[j].at(l)))
                    fail(Err::DomainError, "prime action does not respect the group law");
            }
        }
    return s;
}

const std::string& GaloisSetup::act(int group_index, const std::string& label) const {
    const auto& m = prime_action.at(group_index);
    auto it = m.find(label);
    if (it == m.end()) fail(Err::MissingPrime, "label " + label + " has no image in the prime tables");
    return it->second;
}

std::vector<std::string> GaloisSetup::all_labels() const {
    std::vector<std::string> out;
    for (const auto& [l, _] : prime_action.at(0)) out.push_back(l);
    std::sort(out.begin(), out.end());
    return out;
}

EigensystemRecord inner_conjugate(const EigensystemRecord& r, int group_index,
                                  const GaloisSetup& setup) {
    EigensystemRecord out = r;
    out.eigenvalues.clear();
    for (const auto& [l, v] : r.eigenvalues) {
        const std::string& img = setup.act(group_index, l);
        auto it = r.eigenvalues.find(img);
        if (it == r.eigenvalues.end())
            fail(Err::MissingPrime, "record " + r.label + " stores no eigenvalue at " + img);
        out.eigenvalues.emplace(l, it->second);
    }
    return out;
}

EigensystemRecord exterior_twist(const EigensystemRecord& r, const NFAutomorphism& tau) {
    if (!tau.parent().same_field(r.coeff_field))
        fail(Err::WrongField, "twist automorphism acts on a different field");
    EigensystemRecord out = r;
    for (auto& [l, v] : out.eigenvalues) v = tau.apply(v);
    return out;
}

bool records_equal(const EigensystemRecord& r, const EigensystemRecord& s) {
    if (!r.coeff_field.same_field(s.coeff_field)) return false;
    return r.eigenvalues == s.eigenvalues;
}

std::optional<NFAutomorphism> match_up_to_twist(const EigensystemRecord& r,
                                               const EigensystemRecord& s) {
    if (!r.coeff_field.same_field(s.coeff_field))
        fail(Err::MixedParents, "records over different coefficient fields");
    const AutGroup& aut = r.aut_group();
    auto rgen = r.eigenvalues.find(r.generator_label);
    auto sgen = s.eigenvalues.find(r.generator_label);
    if (rgen == r.eigenvalues.end() || sgen == s.eigenvalues.end())
        fail(Err::SchemaViolation, "records do not share the generator label " + r.generator_label);
    for (int i = 0; i < aut.size(); ++i) {
        const NFAutomorphism& tau = aut.at(i);
        if (!(tau.apply(rgen->second) == sgen->second)) continue;
        // the generator eigenvalue pins tau down; verify everywhere
        bool all = true;
        for (const auto& [l, v] : r.eigenvalues) {
            auto it = s.eigenvalues.find(l);
            if (it == s.eigenvalues.end() || !(tau.apply(v) == it->second)) {
                all = false;
                break;
            }
        }
        if (all) return tau;
    }
    return std::nullopt;
}

OrbitClass OrbitClass::of(const EigensystemRecord& r) {
    const AutGroup& aut = r.aut_group();
    OrbitClass c{r};
    auto key = [&](const EigensystemRecord& rec) {
        return rec.eigenvalues.at(rec.generator_label).coords();
    };
    for (int i = 1; i < aut.size(); ++i) {
        EigensystemRecord tw = exterior_twist(r, aut.at(i));
        if (key(tw) < key(c.representative)) c.representative = tw;
    }
    return c;
}

bool OrbitClass::contains(const EigensystemRecord& s) const {
    if (!representative.coeff_field.same_field(s.coeff_field)) return false;
    return match_up_to_twist(representative, s).has_value();
}

const std::vector<std::string>& OrbitAction::orbit_of(const std::string& label) const {
    for (const auto& o : orbits)
        if (std::find(o.begin(), o.end(), label) != o.end()) return o;
    fail(Err::DomainError, "no orbit contains " + label);
}

OrbitAction orbit_action(const GaloisSetup& setup, const std::vector<EigensystemRecord>& records) {
    // distinct orbits required
    for (size_t i = 0; i < records.size(); ++i)
        for (size_t j = i + 1; j < records.size(); ++j)
            if (records[i].coeff_field.same_field(records[j].coeff_field) &&
                match_up_to_twist(records[i], records[j]))
                fail(Err::SchemaViolation, "records " + records[i].label + " and " +
                                               records[j].label + " lie in the same Hecke orbit");

    OrbitAction act;
    const AutGroup& G = setup.group;
    act.table.resize(G.size());
    for (const auto& r : records) act.labels.push_back(r.label);

    for (int gi = 0; gi < G.size(); ++gi) {
        for (const auto& r : records) {
            EigensystemRecord conj = inner_conjugate(r, gi, setup);
            const EigensystemRecord* target = nullptr;
            for (const auto& s : records) {
                if (!s.coeff_field.same_field(r.coeff_field)) continue;
                if (match_up_to_twist(s, conj)) {
                    if (target)
                        fail(Err::SchemaViolation, "conjugate of " + r.label + " matches several records");
                    target = &s;
                }
            }
            if (!target)
                fail(Err::OrphanOrbit, "conjugate of " + r.label + " under " + G.at(gi).name() +
                                           " matches no listed record");
            act.table[gi][r.label] = target->label;
        }
    }

    // verify the action law against the multiplication table
    for (int i = 0; i < G.size(); ++i)
        for (int j = 0; j < G.size(); ++j)
            for (const auto& r : records) {
                // sigma_i . (sigma_j . [r]) = (sigma_i sigma_j) . [r]
                const std::string& one_then_other = act.table[i].at(act.table[j].at(r.label));
                if (act.table[G.mult(i, j)].at(r.label) != one_then_other)
                    fail(Err::HomomorphismViolation, "orbit table is not a group action at " + r.label);
            }

    // orbits of the action and stabilizer orders
    std::set<std::string> seen;
    for (const auto& r : records) {
        if (seen.count(r.label)) continue;
        std::set<std::string> orbit;
        for (int gi = 0; gi < G.size(); ++gi) orbit.insert(act.table[gi].at(r.label));
        act.orbits.emplace_back(orbit.begin(), orbit.end());
        for (const auto& l : orbit) seen.insert(l);
    }
    std::sort(act.orbits.begin(), act.orbits.end());
    for (const auto& r : records) {
        int stab = 0;
        for (int gi = 0; gi < G.size(); ++gi)
            if (act.table[gi].at(r.label) == r.label) ++stab;
        act.stabilizer_order[r.label] = stab;
    }
    return act;
}

PhiReport phi_analysis(const GaloisSetup& setup, const std::vector<EigensystemRecord>& records,
                       const std::string& label) {
    const EigensystemRecord* rec = nullptr;
    for (const auto& r : records)
        if (r.label == label) rec = &r;
    if (!rec) fail(Err::SchemaViolation, "no record with label " + label);

    const AutGroup& G = setup.group;
    PhiReport rep;
    rep.label = label;

    // stabilizer and phi values: sigma with sigma(r) = r^tau for some tau
    std::map<int, NFAutomorphism> phi;
    for (int gi = 0; gi < G.size(); ++gi) {
        EigensystemRecord conj = inner_conjugate(*rec, gi, setup);
        if (auto tau = match_up_to_twist(*rec, conj)) {
            rep.stabilizer.push_back(gi);
            rep.stabilizer_names.push_back(G.at(gi).name());
            phi.emplace(gi, *tau);
        }
    }
    // the stabilizer is a subgroup; phi must be a homomorphism on it
    const AutGroup& autL = rec->aut_group();
    for (int i : rep.stabilizer)
        for (int j : rep.stabilizer) {
            int ij = G.mult(i, j);
            if (!phi.count(ij))
                fail(Err::HomomorphismViolation, "stabilizer of " + label + " is not closed");
            NFAutomorphism expect = phi.at(i).compose(phi.at(j));
            if (!(phi.at(ij) == expect))
                fail(Err::HomomorphismViolation,
                     "phi(sigma_i sigma_j) != phi(sigma_i) phi(sigma_j) on the stabilizer of " + label);
        }
    for (const auto& [gi, tau] : phi) rep.images.emplace_back(gi, tau);

    // Delta = image of phi inside Aut(L)
    std::vector<int> delta_indices;
    for (const auto& [gi, tau] : phi) {
        int k = autL.index_of(tau);
        if (k < 0) fail(Err::HomomorphismViolation, "phi image outside the supplied Aut(L)");
        delta_indices.push_back(k);
    }
    std::sort(delta_indices.begin(), delta_indices.end());
    delta_indices.erase(std::unique(delta_indices.begin(), delta_indices.end()), delta_indices.end());
    AutGroup delta = autL.subgroup(delta_indices);
    rep.delta_order = delta.size();
    rep.injective = rep.delta_order == static_cast<int>(rep.stabilizer.size());

    auto [K, kgen] = fixed_field(rec->coeff_field, delta);
    rep.fixed_field_poly = K.poly();

    AutGroup stab_group = setup.group.subgroup(rep.stabilizer);
    auto [Eprime, egen] = fixed_field(setup.base_field, stab_group);
    rep.descent.base_field_poly = Eprime.poly();
    rep.descent.dimension = rec->coeff_field.degree();
    rep.descent.endo_field_poly = K.poly();

    rep.base_change = is_base_change(setup, *rec);
    return rep;
}

bool is_base_change(const GaloisSetup& setup, const EigensystemRecord& r) {
    for (int gi = 0; gi < setup.group.size(); ++gi)
        if (!records_equal(inner_conjugate(r, gi, setup), r)) return false;
    return true;
}

long SpaceSummary::orbit_size_of(const std::string& label) const {
    for (const auto& o : orbit_partition)
        if (std::find(o.begin(), o.end(), label) != o.end()) return static_cast<long>(o.size());
    fail(Err::DomainError, "constituent " + label + " missing from the orbit partition");
}

std::vector<CorollaryFinding> corollary_suite(const SpaceSummary& s) {
    std::vector<CorollaryFinding> out;
    if (s.orbit_partition.empty()) fail(Err::DomainError, "orbit partition required");
    for (const auto& c : s.constituents) {
        long n_same = 0;
        for (const auto& o : s.constituents)
            if (o.dim == c.dim) ++n_same;
        long orbit = s.orbit_size_of(c.label);
        long stab = s.group_order / orbit;

        if (c.dim < s.group_order && n_same == 1)
            out.push_back({"unique-small-dimension", c.label, "MUST_BE_BASE_CHANGE_FROM_INTERMEDIATE",
                           "dimension " + std::to_string(c.dim) + " < |G| = " +
                               std::to_string(s.group_order) +
                               " and unique of its dimension; the form must arise by base change "
                               "from an intermediate field"});

        if (n_same < s.group_order / stab)
            out.push_back({"orbit-count-bound", c.label, "DATA_INCONSISTENT",
                           "only " + std::to_string(n_same) + " constituents of dimension " +
                               std::to_string(c.dim) + " but the stabilizer bound requires at least " +
                               std::to_string(s.group_order / stab)});

        if (std::gcd(static_cast<long>(c.dim), s.group_order) == 1) {
            if (n_same == 1)
                out.push_back({"coprime-dimension", c.label, "BASE_CHANGE_FROM_BASE",
                               "gcd(d, |G|) = 1 with a single constituent of dimension " +
                                   std::to_string(c.dim) + "; the form is a base change"});
            else if (n_same == s.group_order)
                out.push_back({"coprime-dimension", c.label, "FULL_ORBIT",
                               "gcd(d, |G|) = 1 with |G| constituents of dimension " +
                                   std::to_string(c.dim) + "; not a base change from any proper subfield"});
            else
                out.push_back({"coprime-dimension", c.label, "DATA_INCONSISTENT",
                               "gcd(d, |G|) = 1 requires the count of dimension-" +
                                   std::to_string(c.dim) + " constituents to be 1 or |G| = " +
                                   std::to_string(s.group_order) + ", found " + std::to_string(n_same)});
        }
    }
    return out;
}

std::pair<long, long> genus_bookkeeping(const SpaceSummary& s) {
    long total = 0, quotient = 0;
    for (const auto& c : s.constituents) {
        total += c.dim;
        if (!c.atkin_lehner)
            fail(Err::MissingSign, "constituent " + c.label + " has no Atkin-Lehner sign");
        // the quotient keeps the +1 eigenspace of w_D = -w
        if (*c.atkin_lehner == -1) quotient += c.dim;
    }
    return {total, quotient};
}

std::map<std::string, FqElem> eigensystem_mod_prime(const EigensystemRecord& r, const PrimeIdeal& P) {
    std::map<std::string, FqElem> out;
    for (const auto& [l, v] : r.eigenvalues) out.emplace(l, residue_reduce(v, P));
    return out;
}

std::optional<int> mod_systems_frobenius_match(const FinField& residue,
                                               const std::map<std::string, FqElem>& m1,
                                               const std::map<std::string, FqElem>& m2) {
    if (m1.size() != m2.size()) return std::nullopt;
    for (unsigned j = 0; j < residue.k(); ++j) {
        bool all = true;
        for (const auto& [l, v] : m1) {
            auto it = m2.find(l);
            if (it == m2.end()) return std::nullopt;
            FqElem w = v;
            for (unsigned t = 0; t < j; ++t) w = residue.frobenius(w);
            if (!(w == it->second)) {
                all = false;
                break;
            }
        }
        if (all) return static_cast<int>(j);
    }
    return std::nullopt;
}

}  // namespace hol
