#include "hol/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hol/errors.hpp"
#include "hol/rational.hpp"

namespace hol {

Perm::Perm(std::vector<uint32_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (uint32_t v : img_) {
        if (v >= img_.size() || seen[v]) fail(Err::DomainError, "not a permutation");
        seen[v] = true;
    }
}

Perm Perm::identity(uint32_t n) {
    std::vector<uint32_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
}

Perm Perm::operator*(const Perm& o) const {
    if (degree() != o.degree()) fail(Err::DomainError, "permutation degree mismatch");
    std::vector<uint32_t> v(degree());
    for (uint32_t i = 0; i < degree(); ++i) v[i] = img_[o.img_[i]];
    Perm r;
    r.img_ = std::move(v);
    return r;
}

Perm Perm::inverse() const {
    std::vector<uint32_t> v(degree());
    for (uint32_t i = 0; i < degree(); ++i) v[img_[i]] = i;
    Perm r;
    r.img_ = std::move(v);
    return r;
}

std::vector<int> Perm::cycle_type() const {
    std::vector<bool> seen(degree(), false);
    std::vector<int> parts;
    for (uint32_t i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        uint32_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j];
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

std::string cycle_type_to_string(const CycleType& t) {
    // ascending with exponents, e.g. "1^17", "(1,2^8)", "(17)"
    std::map<int, int> mult;
    for (int p : t) ++mult[p];
    std::ostringstream os;
    bool parens = mult.size() > 1 || (mult.size() == 1 && mult.begin()->first != 1);
    if (parens) os << "(";
    bool first = true;
    for (const auto& [part, count] : mult) {
        if (!first) os << ",";
        os << part;
        if (count > 1) os << "^" << count;
        first = false;
    }
    if (parens) os << ")";
    return os.str();
}

bool cycle_type_is_odd(const CycleType& t) {
    long transpositions = 0;
    for (int p : t) transpositions += p - 1;
    return transpositions & 1;
}

long cycle_type_element_order(const CycleType& t) {
    long l = 1;
    for (int p : t) l = std::lcm(l, static_cast<long>(p));
    return l;
}

GroupModel GroupModel::generate(std::string name, const std::vector<Perm>& gens, size_t element_cap) {
    if (gens.empty()) fail(Err::DomainError, "need at least one generator");
    uint32_t n = gens[0].degree();
    for (const auto& g : gens)
        if (g.degree() != n) fail(Err::DomainError, "generator degree mismatch");
    std::set<Perm> closure{Perm::identity(n)};
    std::vector<Perm> frontier{Perm::identity(n)};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& x : frontier)
            for (const Perm& g : gens) {
                Perm y = x * g;
                if (closure.insert(y).second) {
                    if (closure.size() > element_cap)
                        fail(Err::OrderCapExceeded, "group closure exceeds cap of " + std::to_string(element_cap));
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    GroupModel m;
    m.name_ = std::move(name);
    m.degree_ = n;
    m.elems_.assign(closure.begin(), closure.end());
    return m;
}

bool GroupModel::contains(const Perm& g) const {
    return std::binary_search(elems_.begin(), elems_.end(), g);
}

bool GroupModel::same_group(const GroupModel& o) const {
    return degree_ == o.degree_ && elems_ == o.elems_;
}

std::map<CycleType, long> GroupModel::cycle_type_table() const {
    std::map<CycleType, long> out;
    for (const Perm& g : elems_) ++out[g.cycle_type()];
    return out;
}

GroupModel build_frobenius_group(uint64_t p) {
    if (!is_prime_u64(p)) fail(Err::DomainError, std::to_string(p) + " is not prime");
    if (p > 317) fail(Err::OrderCapExceeded, "order p(p-1) exceeds the enumeration cap for p > 317");
    uint32_t n = static_cast<uint32_t>(p);
    std::vector<uint32_t> shift(n), mult(n);
    uint64_t g = least_primitive_root(p);
    for (uint32_t x = 0; x < n; ++x) {
        shift[x] = static_cast<uint32_t>((x + 1) % p);
        mult[x] = static_cast<uint32_t>(mulmod_u64(g, x, p));
    }
    GroupModel m = GroupModel::generate("frobenius:" + std::to_string(p), {Perm(shift), Perm(mult)});
    if (m.order() != static_cast<long>(p * (p - 1)))
        fail(Err::DomainError, "Frobenius group has unexpected order");
    return m;
}

GroupModel build_dihedral_on_zp(uint64_t p) {
    uint32_t n = static_cast<uint32_t>(p);
    std::vector<uint32_t> shift(n), negate(n);
    for (uint32_t x = 0; x < n; ++x) {
        shift[x] = static_cast<uint32_t>((x + 1) % p);
        negate[x] = static_cast<uint32_t>((p - x) % p);
    }
    return GroupModel::generate("dihedral:" + std::to_string(p), {Perm(shift), Perm(negate)});
}

GroupModel build_d17_with_multiplier(int quotient_order) {
    // adjoins x -> g^{8/q} x, whose class has order q in the quotient of
    // F_17 by D_17 (the quotient is cyclic of order 8; the multiplier's
    // permutation order is 2q since -1 = g^8 already lies in D_17)
    const uint64_t p = 17;
    uint64_t g = least_primitive_root(p);  // order 16
    if (quotient_order < 1 || 8 % quotient_order != 0)
        fail(Err::DomainError, "quotient order must divide 8");
    uint64_t a = powmod_u64(g, 8 / quotient_order, p);
    uint32_t n = 17;
    std::vector<uint32_t> shift(n), negate(n), mult(n);
    for (uint32_t x = 0; x < n; ++x) {
        shift[x] = (x + 1) % 17;
        negate[x] = (17 - x) % 17;
        mult[x] = static_cast<uint32_t>(mulmod_u64(a, x, p));
    }
    return GroupModel::generate("d17+mult" + std::to_string(quotient_order),
                                {Perm(shift), Perm(negate), Perm(mult)});
}

bool subgroup_closure_check() {
    GroupModel d17 = build_dihedral_on_zp(17);
    if (d17.order() != 34) return false;
    GroupModel closed = build_d17_with_multiplier(8);
    if (closed.order() != 272) return false;
    return closed.same_group(build_frobenius_group(17));
}

}  // namespace hol
