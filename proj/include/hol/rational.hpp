#ifndef HOL_RATIONAL_HPP
#define HOL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hol {

/* Exact arithmetic substrate: GMP integers and canonicalized rationals. */
using Int = mpz_class;
using Rat = mpq_class;

// Parses "n" or "p/q" (any base-10 integers); result is canonicalized.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& x);

bool rat_is_integer(const Rat& x);
Int rat_to_integer(const Rat& x);  // DomainError if not integral

// 2-adic valuation of n != 0, and |n| / 2^v2
long two_adic_valuation(const Int& n);
Int odd_part(const Int& n);
bool is_perfect_square(const Int& n);

// n = s * m^2 with s squarefree; returns s (sign of n preserved).
// Factors by trial division; intended for the small discriminants that
// arise from quadratic fields here.
Int squarefree_part(const Int& n);

std::vector<std::pair<Int, int>> factor_integer(const Int& n);

/* small prime / modular utilities on machine words */
std::vector<uint64_t> primes_up_to(uint64_t bound);
bool is_prime_u64(uint64_t n);
uint64_t euler_phi_u64(uint64_t n);
std::vector<uint64_t> divisors_u64(uint64_t n);
uint64_t least_primitive_root(uint64_t p);
uint64_t mul_order_mod(uint64_t a, uint64_t n);  // multiplicative order, gcd(a,n)=1

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);
uint64_t invmod_u64(uint64_t a, uint64_t p);
uint64_t u64_gcd(uint64_t a, uint64_t b);

}  // namespace hol

#endif
