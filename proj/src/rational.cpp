#include "hol/rational.hpp"

#include <algorithm>

#include "hol/errors.hpp"

namespace hol {

Rat rat_from_string(const std::string& s) {
    Rat x;
    if (x.set_str(s, 10) != 0) fail(Err::SchemaViolation, "bad rational literal '" + s + "'");
    x.canonicalize();
    return x;
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

bool rat_is_integer(const Rat& x) { return x.get_den() == 1; }

Int rat_to_integer(const Rat& x) {
    if (!rat_is_integer(x)) fail(Err::DomainError, "rational " + rat_to_string(x) + " is not an integer");
    return x.get_num();
}

long two_adic_valuation(const Int& n) {
    if (n == 0) fail(Err::DomainError, "2-adic valuation of zero");
    return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

Int odd_part(const Int& n) {
    Int a = abs(n);
    if (a == 0) return 0;
    Int r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), two_adic_valuation(a));
    return r;
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::vector<std::pair<Int, int>> factor_integer(const Int& n) {
    // trial division, then a primality check on the cofactor; enough for the
    // discriminants handled in this project
    std::vector<std::pair<Int, int>> out;
    Int m = abs(n);
    if (m <= 1) return out;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    for (Int p = 3; p * p <= m && p < 2000000; p += 2) strip(p);
    if (m > 1) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 40) == 0 && !is_perfect_square(m))
            fail(Err::DomainError, "integer too hard to factor: " + m.get_str());
        if (is_perfect_square(m) && mpz_probab_prime_p(m.get_mpz_t(), 40) == 0) {
            Int r;
            mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
            if (mpz_probab_prime_p(r.get_mpz_t(), 40) == 0)
                fail(Err::DomainError, "integer too hard to factor: " + m.get_str());
            out.emplace_back(r, 2);
        } else {
            out.emplace_back(m, 1);
        }
    }
    return out;
}

Int squarefree_part(const Int& n) {
    if (n == 0) fail(Err::DomainError, "squarefree part of zero");
    Int s = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factor_integer(n))
        if (e & 1) s *= p;
    return s;
}

std::vector<uint64_t> primes_up_to(uint64_t bound) {
    std::vector<bool> sieve(bound + 1, true);
    std::vector<uint64_t> out;
    for (uint64_t i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    Int m(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(m.get_mpz_t(), 30) != 0;
}

uint64_t euler_phi_u64(uint64_t n) {
    uint64_t r = n;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

std::vector<uint64_t> divisors_u64(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) fail(Err::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
    return powmod_u64(a, p - 2, p);  // p prime
}

uint64_t u64_gcd(uint64_t a, uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

uint64_t mul_order_mod(uint64_t a, uint64_t n) {
    a %= n;
    if (u64_gcd(a, n) != 1) fail(Err::NotCoprime, std::to_string(a) + " not invertible mod " + std::to_string(n));
    uint64_t ord = 1, x = a;
    while (x != 1 % n) {
        x = mulmod_u64(x, a, n);
        if (++ord > n) fail(Err::DomainError, "order computation overflow");
    }
    return ord;
}

uint64_t least_primitive_root(uint64_t p) {
    if (p == 2) return 1;
    uint64_t phi = p - 1;
    std::vector<uint64_t> qs;
    uint64_t m = phi;
    for (uint64_t q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            qs.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) qs.push_back(m);
    for (uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint64_t q : qs)
            if (powmod_u64(g, phi / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    fail(Err::DomainError, "no primitive root mod " + std::to_string(p));
}

const char* err_name(Err e) {
    switch (e) {
        case Err::DomainError: return "DomainError";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::ZeroReduction: return "ZeroReduction";
        case Err::NotIrreducible: return "NotIrreducible";
        case Err::IrreducibilityInconclusive: return "IrreducibilityInconclusive";
        case Err::MixedParents: return "MixedParents";
        case Err::NotARoot: return "NotARoot";
        case Err::ClosureExceedsDegree: return "ClosureExceedsDegree";
        case Err::GeneratorSearchExhausted: return "GeneratorSearchExhausted";
        case Err::WrongDegree: return "WrongDegree";
        case Err::NotCoprime: return "NotCoprime";
        case Err::IndexDivisor: return "IndexDivisor";
        case Err::NoMatch: return "NoMatch";
        case Err::NotPIntegral: return "NotPIntegral";
        case Err::MissingPrime: return "MissingPrime";
        case Err::WrongField: return "WrongField";
        case Err::OrphanOrbit: return "OrphanOrbit";
        case Err::HomomorphismViolation: return "HomomorphismViolation";
        case Err::OrderCapExceeded: return "OrderCapExceeded";
        case Err::MissingSign: return "MissingSign";
        case Err::SchemaViolation: return "SchemaViolation";
    }
    return "Error";
}

}  // namespace hol
