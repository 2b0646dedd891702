#ifndef HOL_PERMGROUP_HPP
#define HOL_PERMGROUP_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hol {

/* permutation of {0, ..., n-1} */
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<uint32_t> images);
    static Perm identity(uint32_t n);

    uint32_t degree() const { return static_cast<uint32_t>(img_.size()); }
    uint32_t operator()(uint32_t i) const { return img_[i]; }
    const std::vector<uint32_t>& images() const { return img_; }

    Perm operator*(const Perm& o) const;  // (a*b)(x) = a(b(x))
    Perm inverse() const;
    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    // parts of the cycle decomposition, descending
    std::vector<int> cycle_type() const;

  private:
    std::vector<uint32_t> img_;
};

using CycleType = std::vector<int>;  // descending parts summing to the degree

std::string cycle_type_to_string(const CycleType& t);  // e.g. "1^17", "(1,2^8)"
bool cycle_type_is_odd(const CycleType& t);             // odd permutation parity
long cycle_type_element_order(const CycleType& t);      // lcm of the parts

/*
 * A finite permutation group with full element enumeration (the scales here
 * are small: the largest model is F_317 of order 100172).
 */
class GroupModel {
  public:
    static GroupModel generate(std::string name, const std::vector<Perm>& gens,
                               size_t element_cap = 110000);

    const std::string& name() const { return name_; }
    uint32_t degree() const { return degree_; }
    long order() const { return static_cast<long>(elems_.size()); }
    const std::vector<Perm>& elements() const { return elems_; }
    bool contains(const Perm& g) const;
    bool same_group(const GroupModel& o) const;

    std::map<CycleType, long> cycle_type_table() const;

  private:
    std::string name_;
    uint32_t degree_ = 0;
    std::vector<Perm> elems_;  // sorted
};

// Z/p x| (Z/p)^* acting on Z/p, generated by x -> x+1 and x -> g x with g the
// least primitive root; order p(p-1); requires p <= 317
GroupModel build_frobenius_group(uint64_t p);

// <x -> x+1, x -> -x> inside Sym(Z/p), order 2p
GroupModel build_dihedral_on_zp(uint64_t p);

// D_17 together with a multiplier whose class has the given order in the
// cyclic order-8 quotient F_17 / D_17; order 8 closes to the full group,
// order 4 closes to a subgroup of order 136
GroupModel build_d17_with_multiplier(int quotient_order);

// builds D_17 = <x+1, -x>, adjoins an order-8 multiplier, and checks the
// closure equals build_frobenius_group(17) of order 272
bool subgroup_closure_check();

}  // namespace hol

#endif
