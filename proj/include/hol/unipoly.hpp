#ifndef HOL_UNIPOLY_HPP
#define HOL_UNIPOLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hol/rational.hpp"

namespace hol {

/*
 * Dense univariate polynomial over Q, coefficients in ascending degree order.
 * All arithmetic is exact. The zero polynomial has degree -1.
 */
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(const Rat& constant);
    explicit UniPoly(std::vector<Rat> coeffs);
    UniPoly(std::initializer_list<long> ints);

    static UniPoly x();
    static UniPoly monomial(int deg, const Rat& c = Rat(1));
    static UniPoly from_ints(const std::vector<long>& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const;
    bool is_monic() const;
    bool is_integral() const;
    bool is_constant() const { return c_.size() <= 1; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    // quotient/remainder; divisor must be nonzero
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
    UniPoly operator/(const UniPoly& d) const { return divrem(d).first; }
    UniPoly operator%(const UniPoly& d) const { return divrem(d).second; }

    UniPoly derivative() const;
    UniPoly compose(const UniPoly& inner) const;  // this(inner(x))
    Rat eval(const Rat& x) const;

    UniPoly monic() const;  // leading coefficient scaled to 1
    Int integer_content() const;          // content of an integral polynomial
    UniPoly primitive_integral() const;   // clears denominators, divides content, leading > 0
    Int denominator_lcm() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize();
    std::vector<Rat> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic, gcd(0,0)=0

// Exact resultant via the subresultant pseudo-remainder sequence.
// Both arguments must be nonzero.
Rat resultant(const UniPoly& a, const UniPoly& b);

// disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f), deg f >= 1
Rat discriminant(const UniPoly& f);

}  // namespace hol

#endif
