#ifndef HOL_NUMBERFIELD_HPP
#define HOL_NUMBERFIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hol/irreducible.hpp"
#include "hol/rational.hpp"
#include "hol/unipoly.hpp"

namespace hol {

class NFElement;
class NFAutomorphism;
class AutGroup;

/*
 * Q[x]/(f) for f monic, integral and certified irreducible. Elements live on
 * the power basis of the generator theta. A NumberField is an immutable
 * shared handle; copies are cheap and all operations are pure.
 */
class NumberField {
  public:
    // certifies irreducibility; throws NotIrreducible / IrreducibilityInconclusive
    static NumberField create(const UniPoly& f, int prime_budget = 64);
    // for polynomials irreducible by construction (cyclotomic polynomials,
    // minimal polynomials); stores a structural certificate
    static NumberField from_known_irreducible(const UniPoly& f, const std::string& reason);

    int degree() const;
    const UniPoly& poly() const;
    const IrreducibilityCertificate& certificate() const;
    std::pair<int, int> signature() const;  // (r1, r2) by Sturm chains, cached

    bool same_field(const NumberField& o) const;  // defining polynomials equal

    NFElement zero() const;
    NFElement one() const;
    NFElement gen() const;
    NFElement from_rational(const Rat& r) const;
    NFElement element(std::vector<Rat> coords) const;          // power-basis coords, length n
    NFElement from_poly(const UniPoly& g) const;               // g(theta), reduced mod f

  private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

class NFElement {
  public:
    NFElement() = default;

    const NumberField& parent() const { return parent_; }
    const std::vector<Rat>& coords() const { return coords_; }
    UniPoly as_poly() const;  // polynomial in theta of degree < n
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // DomainError unless coords are rational

    NFElement operator+(const NFElement& o) const;
    NFElement operator-(const NFElement& o) const;
    NFElement operator-() const;
    NFElement operator*(const NFElement& o) const;
    NFElement operator*(const Rat& s) const;
    NFElement inverse() const;  // DivisionByZero on zero
    NFElement pow(long e) const;
    bool operator==(const NFElement& o) const;
    bool operator!=(const NFElement& o) const { return !(*this == o); }

    // monic least-degree rational polynomial vanishing on this element;
    // its degree divides the field degree
    UniPoly minimal_polynomial() const;

    std::string to_string(const std::string& var = "a") const { return as_poly().to_string(var); }

  private:
    friend class NumberField;
    friend class NFAutomorphism;
    NFElement(NumberField parent, std::vector<Rat> coords);
    NumberField parent_;
    std::vector<Rat> coords_;
};

// evaluate a rational polynomial at a field element
NFElement eval_at(const UniPoly& g, const NFElement& x);

/*
 * Field automorphism given by the image of the generator; the image is
 * verified to be a root of the defining polynomial at construction.
 */
class NFAutomorphism {
  public:
    const NumberField& parent() const { return parent_; }
    const NFElement& generator_image() const { return image_; }
    int order() const;  // computed on first use for composites, cached
    bool is_identity() const;

    NFElement apply(const NFElement& x) const;
    NFAutomorphism compose(const NFAutomorphism& o) const;  // this after o: x -> this(o(x))
    NFAutomorphism inverse() const;                          // power order-1
    NFAutomorphism power(int k) const;
    bool operator==(const NFAutomorphism& o) const;

    const std::string& name() const { return name_; }
    NFAutomorphism named(const std::string& n) const;

  private:
    friend NFAutomorphism verify_automorphism(const NumberField&, const NFElement&);
    friend NFAutomorphism identity_automorphism(const NumberField&);
    friend class NumberField;
    NFAutomorphism(NumberField parent, NFElement image, int order, std::string name);
    // columns()[j] = coordinates of image^j; application is a fixed-size
    // matrix-vector product instead of polynomial composition
    const std::vector<std::vector<Rat>>& columns() const;
    NumberField parent_;
    NFElement image_;
    mutable int order_;  // -1 until computed
    mutable std::shared_ptr<const std::vector<std::vector<Rat>>> cols_;
    std::string name_;
};

// checks defining_poly(img) == 0 (NotARoot otherwise) and computes the order
// by iterated composition (capped by the field degree)
NFAutomorphism verify_automorphism(const NumberField& K, const NFElement& img);

NFAutomorphism identity_automorphism(const NumberField& K);

/*
 * A finite group of verified automorphisms, closed under composition, with
 * its multiplication table. Element 0 is the identity.
 */
class AutGroup {
  public:
    static AutGroup generate(const NumberField& K, const std::vector<NFAutomorphism>& gens);

    const NumberField& field() const { return field_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const NFAutomorphism& at(int i) const { return elems_[i]; }
    int mult(int i, int j) const { return table_[i][j]; }  // index of at(i) ∘ at(j)
    int inverse_of(int i) const;
    int index_of(const NFAutomorphism& a) const;  // -1 if absent
    std::vector<int> element_orders() const;
    bool is_cyclic() const;

    AutGroup subgroup(std::vector<int> element_indices) const;  // closure of the chosen elements

  private:
    AutGroup(NumberField f, std::vector<NFAutomorphism> e);
    NumberField field_;
    std::vector<NFAutomorphism> elems_;
    std::vector<std::vector<int>> table_;
};

/*
 * Fixed field of a group of automorphisms: returns a subfield of degree
 * n/|H| together with the element of K generating it. Candidates are drawn
 * from the deterministic schedule theta, theta^2, ..., theta^{n-1}, then
 * theta + c*theta^2 for c = 1, 2, ...
 */
std::pair<NumberField, NFElement> fixed_field(const NumberField& K, const AutGroup& H);

// true iff the squarefree parts of the discriminants agree; arguments must be
// monic integral irreducible quadratics
bool same_quadratic_field(const UniPoly& f, const UniPoly& g);

// restriction of an automorphism of K to the subfield generated by gen;
// DomainError if the automorphism does not stabilize that subfield
NFAutomorphism restrict_automorphism(const NumberField& sub, const NFElement& gen_in_K,
                                     const NFAutomorphism& a);

// express x in the power basis of gen (both in the same field); nullopt if x
// is not in the subfield generated by gen
std::optional<std::vector<Rat>> subfield_coordinates(const NFElement& gen_in_K, int sub_degree,
                                                     const NFElement& x);

}  // namespace hol

#endif
