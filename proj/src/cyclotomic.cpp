#include "hol/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <optional>

#include "hol/errors.hpp"
#include "hol/ratmat.hpp"

namespace hol {

UniPoly cyclotomic_poly(unsigned n) {
    static std::map<unsigned, UniPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) fail(Err::DomainError, "cyclotomic index must be >= 1");

    std::function<UniPoly(unsigned)> phi = [&](unsigned m) -> UniPoly {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        // x^m - 1 divided by the product of Phi_d over proper divisors d | m
        std::vector<Rat> xm(m + 1, Rat(0));
        xm[0] = -1;
        xm[m] = 1;
        UniPoly num(std::move(xm));
        for (unsigned d : divisors_u64(m))
            if (d < m) num = num / phi(d);
        cache.emplace(m, num);
        return num;
    };
    return phi(n);
}

struct CyclotomicField::Cache {
    NumberField field;
    std::optional<std::pair<NumberField, NFElement>> real;
    std::optional<LinearSolver> real_basis;  // columns: eta^j in the zeta power basis
    std::mutex mtx;

    explicit Cache(NumberField f) : field(std::move(f)) {}
};

CyclotomicField::CyclotomicField(unsigned n) : n_(n) {
    if (n < 3) fail(Err::DomainError, "cyclotomic field needs n >= 3");
    NumberField K = NumberField::from_known_irreducible(
        cyclotomic_poly(n), "cyclotomic polynomial Phi_" + std::to_string(n));
    cache_ = std::make_shared<Cache>(std::move(K));
}

unsigned CyclotomicField::degree() const { return cache_->field.degree(); }
const NumberField& CyclotomicField::field() const { return cache_->field; }

NFAutomorphism CyclotomicField::galois_map(uint64_t k) const {
    k %= n_;
    if (u64_gcd(k, n_) != 1)
        fail(Err::NotCoprime, std::to_string(k) + " is not coprime to " + std::to_string(n_));
    // zeta^k reduced mod Phi_n
    NFElement img = cache_->field.from_poly(UniPoly::monomial(static_cast<int>(k)));
    return verify_automorphism(cache_->field, img).named("z^" + std::to_string(k));
}

std::pair<NumberField, NFElement> CyclotomicField::real_subfield() const {
    std::lock_guard<std::mutex> lock(cache_->mtx);
    if (cache_->real) return *cache_->real;
    if (n_ < 5) fail(Err::DomainError, "real subfield needs n >= 5");
    const NumberField& K = cache_->field;
    // eta = zeta + zeta^{-1}; zeta^{-1} = zeta^{n-1} since zeta^n = 1
    NFElement eta = K.from_poly(UniPoly::monomial(1) + UniPoly::monomial(static_cast<int>(n_ - 1)));
    UniPoly mp = eta.minimal_polynomial();
    if (mp.degree() != static_cast<int>(degree() / 2))
        fail(Err::DomainError, "real subfield has unexpected degree");
    if (!mp.is_integral()) fail(Err::DomainError, "real subfield polynomial not integral");
    NumberField R = NumberField::from_known_irreducible(
        mp, "minimal polynomial of zeta_" + std::to_string(n_) + " + its inverse");
    cache_->real = {R, eta};
    return *cache_->real;
}

NFAutomorphism CyclotomicField::restrict_to_real(uint64_t k) const {
    auto [R, eta] = real_subfield();
    k %= n_;
    if (u64_gcd(k, n_) != 1)
        fail(Err::NotCoprime, std::to_string(k) + " is not coprime to " + std::to_string(n_));
    const NumberField& K = cache_->field;
    {
        std::lock_guard<std::mutex> lock(cache_->mtx);
        if (!cache_->real_basis) {
            std::vector<RatVec> cols;
            NFElement p = K.one();
            for (int j = 0; j < R.degree(); ++j) {
                cols.push_back(p.coords());
                p = p * eta;
            }
            cache_->real_basis.emplace(K.degree(), std::move(cols));
        }
    }
    // image of eta under zeta -> zeta^k is zeta^k + zeta^{n-k}
    NFElement img_in_K = K.from_poly(UniPoly::monomial(static_cast<int>(k)) +
                                     UniPoly::monomial(static_cast<int>(n_ - k)));
    auto coords = cache_->real_basis->solve(img_in_K.coords());
    if (!coords) fail(Err::DomainError, "restriction does not land in the real subfield");
    return verify_automorphism(R, R.element(*coords));
}

uint64_t CyclotomicField::matching_real_restriction(const NFAutomorphism& target) const {
    for (uint64_t k = 1; k < n_; ++k) {
        if (u64_gcd(k, n_) != 1) continue;
        if (restrict_to_real(k) == target) return k;
    }
    return 0;
}

BetaIdentityReport beta_identity_report() {
    CyclotomicField C(64);
    const NumberField& K = C.field();
    NFElement zeta = K.gen();
    NFElement i = zeta.pow(16);
    NFElement eta = zeta + zeta.pow(63);            // zeta + zeta^{-1}
    NFElement alpha = zeta.pow(2) + zeta.pow(62);   // zeta^2 + zeta^{-2}
    NFElement beta = i * eta;
    NFElement target = -(K.from_rational(Rat(2)) + alpha);

    BetaIdentityReport rep;
    rep.identity_holds = (beta * beta == target);
    rep.sign_variant_differs = !(eta * eta == target);
    rep.beta_degree = beta.minimal_polynomial().degree();
    return rep;
}

bool check_beta_identity() { return beta_identity_report().identity_holds; }

}  // namespace hol
