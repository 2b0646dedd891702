#include "hol/certify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hol/errors.hpp"
#include "hol/fppoly.hpp"

namespace hol {

SampleCounts frobenius_sample(const UniPoly& f, uint64_t max_prime, uint64_t seed) {
    if (!f.is_integral()) fail(Err::DomainError, "sampling needs an integral polynomial");
    if (f.degree() < 1) fail(Err::DomainError, "sampling needs positive degree");
    Int disc = rat_to_integer(discriminant(f));
    if (disc == 0) fail(Err::DomainError, "polynomial is not squarefree");
    Int lc = rat_to_integer(f.leading());

    SampleCounts out;
    out.max_prime = max_prime;
    out.seed = seed;
    for (uint64_t p : primes_up_to(max_prime)) {
        if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        FpPoly red = reduce_mod_p(f, p).monic();
        CycleType t = fp_factor_degrees_squarefree(red);
        ++out.counts[t];
        ++out.primes_sampled;
    }
    return out;
}

DiscAnalysis analyze_discriminant(const UniPoly& f) {
    DiscAnalysis a;
    a.disc = rat_to_integer(discriminant(f));
    if (a.disc == 0) fail(Err::DomainError, "zero discriminant");
    a.v2 = two_adic_valuation(a.disc);
    a.odd_cofactor = odd_part(a.disc);
    a.odd_is_square = is_perfect_square(a.odd_cofactor);
    return a;
}

CertReport certify_group(const UniPoly& f, const GroupModel& candidate, uint64_t max_prime,
                         uint64_t seed, const Rat& tolerance) {
    if (f.degree() != static_cast<int>(candidate.degree()))
        fail(Err::WrongDegree, "polynomial degree differs from the permutation degree");

    CertReport rep;
    rep.poly = f;
    rep.group_name = candidate.name();
    rep.group_order = candidate.order();
    rep.group_degree = candidate.degree();
    rep.max_prime = max_prime;
    rep.seed = seed;
    rep.tolerance = tolerance;
    rep.disc = analyze_discriminant(f);

    SampleCounts sample = frobenius_sample(f, max_prime, seed);
    rep.primes_sampled = sample.primes_sampled;
    auto table = candidate.cycle_type_table();

    bool contradicted = false;
    rep.all_candidate_types_observed = true;
    rep.max_abs_deviation = Rat(0);

    Rat total(sample.primes_sampled);
    for (const auto& [type, count] : table) {
        CertTypeRow row;
        row.type = type;
        row.candidate_count = count;
        row.expected_density = Rat(count) / Rat(rep.group_order);
        auto it = sample.counts.find(type);
        row.observed = it == sample.counts.end() ? 0 : it->second;
        if (row.observed == 0) rep.all_candidate_types_observed = false;
        row.observed_frequency = total == 0 ? Rat(0) : Rat(row.observed) / total;
        row.abs_deviation = abs(row.observed_frequency - row.expected_density);
        if (row.abs_deviation > rep.max_abs_deviation) rep.max_abs_deviation = row.abs_deviation;
        rep.rows.push_back(std::move(row));
    }
    for (const auto& [type, count] : sample.counts) {
        if (table.count(type)) continue;
        contradicted = true;
        CertTypeRow row;
        row.type = type;
        row.observed = count;
        row.candidate_count = 0;
        row.expected_density = Rat(0);
        row.observed_frequency = Rat(count) / total;
        row.abs_deviation = row.observed_frequency;
        rep.rows.push_back(std::move(row));
        rep.notes.push_back("observed type " + cycle_type_to_string(type) +
                            " does not occur in " + candidate.name());
    }
    rep.within_tolerance = rep.max_abs_deviation <= tolerance;

    // exact exclusions licensed by the observations
    long order_lcm = 1;
    bool odd_seen = false;
    for (const auto& [type, count] : sample.counts) {
        (void)count;
        order_lcm = std::lcm(order_lcm, cycle_type_element_order(type));
        odd_seen |= cycle_type_is_odd(type);
    }
    if (sample.primes_sampled > 0) {
        rep.notes.push_back("observed element orders force " + std::to_string(order_lcm) +
                            " to divide the order of the Galois group");
        if (odd_seen)
            rep.notes.push_back("an observed type is an odd permutation, so the Galois group is not contained in A_" +
                                std::to_string(candidate.degree()));
    }
    rep.notes.push_back(
        "verdict is statistical (cycle-type sampling against Chebotarev densities), not a proof");

    rep.verdict = contradicted ? "CONTRADICTED" : "CONSISTENT";
    return rep;
}

std::string CertReport::to_text() const {
    std::ostringstream os;
    os << "certification of " << poly.to_string() << "\n";
    os << "  candidate group: " << group_name << " (order " << group_order << ", degree "
       << group_degree << ")\n";
    os << "  primes sampled: " << primes_sampled << " up to " << max_prime << " (seed " << seed
       << ")\n";
    os << "  cycle types (observed / expected density):\n";
    for (const auto& row : rows) {
        os << "    " << cycle_type_to_string(row.type) << ": " << row.observed << " ("
           << row.observed_frequency.get_str() << " vs " << row.expected_density.get_str();
        os << ", dev " << row.abs_deviation.get_d() << ")";
        if (row.candidate_count == 0) os << "  [NOT IN CANDIDATE GROUP]";
        os << "\n";
    }
    os << "  all candidate types observed: " << (all_candidate_types_observed ? "yes" : "no")
       << "\n";
    os << "  max abs deviation: " << max_abs_deviation.get_d() << " (tolerance "
       << tolerance.get_d() << ", " << (within_tolerance ? "within" : "exceeded") << ")\n";
    os << "  discriminant: " << disc.disc.get_str() << "\n";
    os << "    2-adic valuation " << disc.v2 << ", odd cofactor " << disc.odd_cofactor.get_str()
       << (disc.odd_is_square ? " (a perfect square)" : " (NOT a perfect square)") << "\n";
    for (const auto& n : notes) os << "  note: " << n << "\n";
    os << "  verdict: " << verdict << "\n";
    return os.str();
}

}  // namespace hol
