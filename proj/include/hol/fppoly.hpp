#ifndef HOL_FPPOLY_HPP
#define HOL_FPPOLY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hol/rational.hpp"
#include "hol/unipoly.hpp"

namespace hol {

/*
 * Dense polynomial over the prime field F_p, coefficients ascending in [0, p).
 * p is carried by every value; mixing moduli is an error.
 */
class FpPoly {
  public:
    FpPoly() : p_(0) {}
    explicit FpPoly(uint64_t p) : p_(p) {}
    FpPoly(uint64_t p, std::vector<uint64_t> coeffs);

    static FpPoly zero(uint64_t p) { return FpPoly(p); }
    static FpPoly one(uint64_t p) { return FpPoly(p, {1}); }
    static FpPoly x(uint64_t p) { return FpPoly(p, {0, 1}); }
    static FpPoly constant(uint64_t p, uint64_t c) { return FpPoly(p, {c % p}); }

    uint64_t p() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    uint64_t coeff(int i) const { return (i < 0 || i >= (int)c_.size()) ? 0 : c_[i]; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    uint64_t leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    std::pair<FpPoly, FpPoly> divrem(const FpPoly& d) const;
    FpPoly operator/(const FpPoly& d) const { return divrem(d).first; }
    FpPoly operator%(const FpPoly& d) const { return divrem(d).second; }
    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const FpPoly& o) const { return !(*this == o); }
    bool operator<(const FpPoly& o) const { return c_ < o.c_; }  // lex on ascending coefficients

    FpPoly monic() const;
    FpPoly derivative() const;
    uint64_t eval(uint64_t x) const;
    FpPoly scaled(uint64_t s) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize();
    void check_same(const FpPoly& o) const;
    uint64_t p_;
    std::vector<uint64_t> c_;
};

FpPoly fp_gcd(FpPoly a, FpPoly b);  // monic
FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m);
FpPoly fp_powmod(const FpPoly& a, const Int& e, const FpPoly& m);
// a^(p^k) mod m via iterated p-th powers
FpPoly fp_frobenius_pow(const FpPoly& a, unsigned k, const FpPoly& m);

// Reduction of a rational polynomial mod p. Throws NotPIntegral when a
// denominator vanishes mod p.
FpPoly reduce_mod_p(const UniPoly& f, uint64_t p);
UniPoly lift_to_z(const FpPoly& f);  // coefficients in [0, p)

struct FpFactor {
    FpPoly factor;  // monic irreducible
    int multiplicity;
};

// multiplicity-graded squarefree decomposition (char p aware)
std::vector<FpFactor> fp_squarefree_decomposition(const FpPoly& f);

// distinct-degree splitting of a squarefree monic f: list of (product, degree)
std::vector<std::pair<FpPoly, int>> fp_distinct_degree(const FpPoly& f);

// equal-degree splitting (Cantor-Zassenhaus) of a product of degree-d
// irreducibles; the pseudorandom stream is deterministic in `seed`
std::vector<FpPoly> fp_equal_degree(const FpPoly& f, int d, std::mt19937_64& rng);

// full factorization; factors sorted lexicographically by coefficient sequence
std::vector<FpFactor> fp_factor(const FpPoly& f, uint64_t seed);

bool fp_is_irreducible(const FpPoly& f);

// degree multiset of the irreducible factors of a squarefree monic f,
// descending (distinct-degree splitting alone determines it)
std::vector<int> fp_factor_degrees_squarefree(const FpPoly& f);

}  // namespace hol

#endif
