#include "hol/ideals.hpp"

#include <algorithm>

#include "hol/errors.hpp"

namespace hol {

const PrimeIdeal& FactoredPrime::by_label(const std::string& label) const {
    for (const PrimeIdeal& P : factors)
        if (P.label == label) return P;
    fail(Err::MissingPrime, "no prime with label " + label);
}

bool is_eisenstein(const UniPoly& f, uint64_t p) {
    if (!f.is_monic() || !f.is_integral()) fail(Err::DomainError, "Eisenstein test needs a monic integral polynomial");
    Int pz(static_cast<unsigned long>(p));
    for (int i = 0; i < f.degree(); ++i)
        if (!mpz_divisible_p(rat_to_integer(f.coeff(i)).get_mpz_t(), pz.get_mpz_t())) return false;
    Int c0 = rat_to_integer(f.coeff(0));
    return !mpz_divisible_p(c0.get_mpz_t(), Int(pz * pz).get_mpz_t());
}

FactoredPrime dedekind_factor(const NumberField& K, uint64_t p, uint64_t seed) {
    const UniPoly& f = K.poly();
    int n = K.degree();
    FactoredPrime out;
    out.p = p;
    out.field = K;

    if (is_eisenstein(f, p)) {
        // totally ramified; Z[theta] is p-maximal
        PrimeIdeal P{p, FpPoly::x(p), n, 1, std::to_string(p) + ".1"};
        out.factors.push_back(std::move(P));
        return out;
    }

    FpPoly fbar = reduce_mod_p(f, p);
    auto factors = fp_factor(fbar, seed);

    // Dedekind criterion: with g* = prod g_i and h* a lift of fbar/g*,
    // p is an index divisor iff gcd((g*h* - f)/p, g*, h*) != 1 mod p
    FpPoly gbar = FpPoly::one(p);
    for (const auto& fac : factors) gbar = gbar * fac.factor;
    FpPoly hbar = fbar.monic() / gbar;
    UniPoly gstar = lift_to_z(gbar), hstar = lift_to_z(hbar);
    UniPoly diff = gstar * hstar - f;
    UniPoly Fq = diff * Rat(Int(1), Int(static_cast<unsigned long>(p)));
    if (!Fq.is_integral()) fail(Err::DomainError, "Dedekind lift mismatch");  // g*h* = f mod p by construction
    FpPoly Fbar = reduce_mod_p(Fq, p);
    FpPoly d = fp_gcd(fp_gcd(Fbar, gbar), hbar);
    if (d.degree() > 0)
        fail(Err::IndexDivisor, std::to_string(p) + " divides the index [O_K : Z[theta]] (gcd " +
                                     d.to_string() + "); factorization shape undetermined at this order");

    // factors are already sorted lexicographically by coefficient sequence
    int i = 0;
    int sum_ef = 0;
    for (const auto& fac : factors) {
        PrimeIdeal P;
        P.p = p;
        P.g = fac.factor;
        P.e = fac.multiplicity;
        P.f = fac.factor.degree();
        P.label = std::to_string(p) + "." + std::to_string(++i);
        sum_ef += P.e * P.f;
        out.factors.push_back(std::move(P));
    }
    if (sum_ef != n) fail(Err::DomainError, "sum of e*f does not match the degree");
    return out;
}

FqElem residue_reduce(const NFElement& x, const PrimeIdeal& P) {
    FpPoly rep = reduce_mod_p(x.as_poly(), P.p);  // NotPIntegral on bad denominators
    return {rep % P.g};
}

PrimeIdeal galois_act_prime(const NFAutomorphism& a, const PrimeIdeal& P, const FactoredPrime& ctx) {
    if (!a.parent().same_field(ctx.field)) fail(Err::WrongField, "automorphism of a different field");
    bool in_ctx = false;
    for (const auto& Q : ctx.factors) in_ctx |= (Q.label == P.label && Q.g == P.g);
    if (!in_ctx) fail(Err::NoMatch, "prime " + P.label + " is not a factor in the given context");

    // a(P) is the unique factor Q whose local generator vanishes at the
    // residue of a^{-1}(theta) mod P
    NFElement u = a.inverse().generator_image();
    FqElem r = residue_reduce(u, P);
    FinField RF = P.residue_field();

    const PrimeIdeal* match = nullptr;
    for (const auto& Q : ctx.factors) {
        if (Q.e != P.e || Q.f != P.f) continue;
        FqPoly gq = fq_from_fp(RF, Q.g);
        if (RF.is_zero(gq.eval(r))) {
            if (match) fail(Err::NoMatch, "ambiguous Galois image of " + P.label);
            match = &Q;
        }
    }
    if (!match) fail(Err::NoMatch, "no Galois image found for " + P.label);
    return *match;
}

}  // namespace hol
