#ifndef HOL_FINFIELD_HPP
#define HOL_FINFIELD_HPP

#include <random>
#include <string>
#include <vector>

#include "hol/fppoly.hpp"
#include "hol/rational.hpp"
#include "hol/unipoly.hpp"

namespace hol {

/*
 * F_{p^k} presented as F_p[y]/(m), m monic irreducible of degree k
 * (verified at construction). Elements are FpPoly residues of degree < k.
 * The field object is the arithmetic context; elements are plain data.
 */
struct FqElem {
    FpPoly rep;
    bool operator==(const FqElem& o) const { return rep == o.rep; }
    bool operator!=(const FqElem& o) const { return rep != o.rep; }
    bool operator<(const FqElem& o) const { return rep < o.rep; }
};

class FinField {
  public:
    explicit FinField(uint64_t p);          // prime field, modulus y
    FinField(uint64_t p, FpPoly modulus);   // extension; modulus verified irreducible

    uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    const FpPoly& modulus() const { return modulus_; }
    Int cardinality() const;

    FqElem zero() const { return {FpPoly(p_)}; }
    FqElem one() const { return {FpPoly::one(p_)}; }
    FqElem gen() const;  // residue class of y
    FqElem from_uint(uint64_t v) const { return {FpPoly::constant(p_, v)}; }
    FqElem from_fp(const FpPoly& f) const { return {f % modulus_}; }

    bool is_zero(const FqElem& a) const { return a.rep.is_zero(); }
    FqElem add(const FqElem& a, const FqElem& b) const { return {a.rep + b.rep}; }
    FqElem sub(const FqElem& a, const FqElem& b) const { return {a.rep - b.rep}; }
    FqElem neg(const FqElem& a) const { return {FpPoly(p_) - a.rep}; }
    FqElem mul(const FqElem& a, const FqElem& b) const { return {fp_mulmod(a.rep, b.rep, modulus_)}; }
    FqElem inv(const FqElem& a) const;
    FqElem pow(const FqElem& a, const Int& e) const;
    FqElem frobenius(const FqElem& a) const;  // a^p
    FqElem random(std::mt19937_64& rng) const;

    bool operator==(const FinField& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

    std::string elem_to_string(const FqElem& a, const std::string& var = "y") const;

  private:
    uint64_t p_;
    unsigned k_;
    FpPoly modulus_;
};

/* Dense polynomial over F_q; the field context travels with the value. */
class FqPoly {
  public:
    explicit FqPoly(const FinField& K) : K_(K) {}
    FqPoly(const FinField& K, std::vector<FqElem> coeffs);

    static FqPoly zero(const FinField& K) { return FqPoly(K); }
    static FqPoly one(const FinField& K);
    static FqPoly x(const FinField& K);

    const FinField& field() const { return K_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    FqElem coeff(int i) const;
    const std::vector<FqElem>& coeffs() const { return c_; }
    const FqElem& leading() const;
    bool is_monic() const;

    FqPoly operator+(const FqPoly& o) const;
    FqPoly operator-(const FqPoly& o) const;
    FqPoly operator*(const FqPoly& o) const;
    std::pair<FqPoly, FqPoly> divrem(const FqPoly& d) const;
    FqPoly operator/(const FqPoly& d) const { return divrem(d).first; }
    FqPoly operator%(const FqPoly& d) const { return divrem(d).second; }
    bool operator==(const FqPoly& o) const { return c_ == o.c_; }
    bool operator<(const FqPoly& o) const;  // lex on ascending coefficient sequences

    FqPoly monic() const;
    FqPoly derivative() const;
    FqElem eval(const FqElem& a) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize();
    FinField K_;
    std::vector<FqElem> c_;
};

FqPoly fq_gcd(FqPoly a, FqPoly b);
FqPoly fq_powmod(const FqPoly& a, const Int& e, const FqPoly& m);
FqPoly fq_from_fp(const FinField& K, const FpPoly& f);  // coefficientwise embedding

struct FqFactor {
    FqPoly factor;
    int multiplicity;
};

/*
 * Factorization over any F_q: squarefree split, distinct-degree split,
 * then equal-degree split driven by a deterministic stream seeded by `seed`.
 * Output sorted lexicographically by coefficient sequence.
 */
std::vector<FqFactor> factor_mod_p(const FqPoly& f, uint64_t seed);
std::vector<FqFactor> factor_mod_p(const UniPoly& f, const FinField& K, uint64_t seed);

bool fq_is_irreducible(const FqPoly& f);

}  // namespace hol

#endif
