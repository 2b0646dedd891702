#include "hol/irreducible.hpp"

#include <algorithm>
#include <sstream>

#include "hol/errors.hpp"
#include "hol/fppoly.hpp"

namespace hol {

std::string IrreducibilityCertificate::describe() const {
    std::ostringstream os;
    switch (verdict) {
        case Verdict::Irreducible: os << "irreducible"; break;
        case Verdict::Reducible: os << "reducible"; break;
        case Verdict::Inconclusive: os << "inconclusive"; break;
    }
    if (!structural.empty()) os << " (" << structural << ")";
    if (prime_witness) os << " (irreducible reduction mod " << *prime_witness << ")";
    if (factor_witness) os << " (factor " << factor_witness->to_string() << ")";
    if (verdict == Verdict::Irreducible && !prime_witness && structural.empty() && !primes_used.empty())
        os << " (degree sieve over " << primes_used.size() << " primes)";
    if (verdict == Verdict::Inconclusive) {
        os << " (surviving factor degrees:";
        for (int d : surviving_degrees) os << " " << d;
        os << ")";
    }
    return os.str();
}

IrreducibilityCertificate IrreducibilityCertificate::structural_certificate(const std::string& reason) {
    IrreducibilityCertificate c;
    c.verdict = Verdict::Irreducible;
    c.structural = reason;
    return c;
}

namespace {

std::vector<Int> divisors_bounded(const Int& n) {
    // all positive divisors; n is expected small (constant/leading terms)
    std::vector<Int> out;
    Int a = abs(n);
    for (Int d = 1; d * d <= a; ++d) {
        if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) continue;
        out.push_back(d);
        if (d * d != a) out.push_back(a / d);
    }
    return out;
}

// rational root search; returns a primitive linear factor if one exists
std::optional<UniPoly> rational_root_factor(const UniPoly& f) {
    Int a0 = rat_to_integer(f.coeff(0));
    Int an = rat_to_integer(f.leading());
    if (a0 == 0) return UniPoly({0, 1});  // x divides
    const Int cap{"1000000000000"};
    std::vector<Int> nums, dens;
    if (abs(a0) <= cap && abs(an) <= cap) {
        nums = divisors_bounded(a0);
        dens = divisors_bounded(an);
    } else {
        for (long i = 1; i <= 100; ++i) nums.emplace_back(i), dens.emplace_back(i);
    }
    for (const Int& q : dens)
        for (const Int& d : nums)
            for (int s : {1, -1}) {
                Rat r = Rat(s * d) / Rat(q);
                r.canonicalize();
                if (f.eval(r) == 0) {
                    // primitive integral factor q*x - s*d
                    return UniPoly(std::vector<Rat>{Rat(-s * d), Rat(q)}).primitive_integral();
                }
            }
    return std::nullopt;
}

uint64_t subset_sums_mask(const std::vector<int>& degs) {
    uint64_t mask = 1;
    for (int d : degs) mask |= mask << d;
    return mask;
}

}  // namespace

IrreducibilityCertificate certify_irreducible_over_q(const UniPoly& f0, int prime_budget) {
    if (f0.degree() < 1) fail(Err::DomainError, "irreducibility needs degree >= 1");
    UniPoly f = f0.primitive_integral();
    int n = f.degree();
    IrreducibilityCertificate cert;

    if (n == 1) {
        cert.verdict = Verdict::Irreducible;
        cert.structural = "degree 1";
        return cert;
    }

    if (auto lin = rational_root_factor(f)) {
        cert.verdict = Verdict::Reducible;
        cert.factor_witness = *lin;
        return cert;
    }

    Rat disc = discriminant(f);
    if (disc == 0) {
        cert.verdict = Verdict::Reducible;
        cert.factor_witness = gcd(f, f.derivative()).primitive_integral();
        return cert;
    }
    Int lc_disc = rat_to_integer(f.leading()) * rat_to_integer(disc.get_num());

    // subset sums tracked in a 64-bit mask; beyond that only the prime witness applies
    bool sieve_on = n <= 62;
    uint64_t alive = sieve_on ? ((uint64_t(1) << (n + 1)) - 1) : ~uint64_t(0);
    int sampled = 0;
    for (uint64_t p = 2; sampled < prime_budget; ++p) {
        if (!is_prime_u64(p)) continue;
        if (mpz_divisible_ui_p(lc_disc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        ++sampled;
        cert.primes_used.push_back(p);
        FpPoly red = reduce_mod_p(f, p);
        std::vector<int> degs = fp_factor_degrees_squarefree(red.monic());
        if (degs.size() == 1) {
            cert.verdict = Verdict::Irreducible;
            cert.prime_witness = p;
            return cert;
        }
        if (sieve_on) {
            alive &= subset_sums_mask(degs);
            uint64_t interior = alive & ~((uint64_t(1) << n) | 1);
            if (interior == 0) {
                cert.verdict = Verdict::Irreducible;
                cert.surviving_degrees = {0, n};
                return cert;
            }
        }
    }
    cert.verdict = Verdict::Inconclusive;
    if (sieve_on)
        for (int d = 0; d <= n; ++d)
            if (alive & (uint64_t(1) << d)) cert.surviving_degrees.push_back(d);
    return cert;
}

}  // namespace hol
