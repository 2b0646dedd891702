#include "hol/finfield.hpp"

#include <algorithm>
#include <sstream>

#include "hol/errors.hpp"

namespace hol {

FinField::FinField(uint64_t p) : p_(p), k_(1), modulus_(FpPoly::x(p)) {
    if (!is_prime_u64(p)) fail(Err::DomainError, std::to_string(p) + " is not prime");
}

FinField::FinField(uint64_t p, FpPoly modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime_u64(p)) fail(Err::DomainError, std::to_string(p) + " is not prime");
    if (modulus_.p() != p) fail(Err::DomainError, "modulus has wrong characteristic");
    if (!modulus_.is_monic() || modulus_.degree() < 1)
        fail(Err::DomainError, "modulus must be monic of positive degree");
    if (modulus_.degree() > 1 && !fp_is_irreducible(modulus_))
        fail(Err::DomainError, "modulus " + modulus_.to_string() + " is reducible mod " + std::to_string(p));
    k_ = static_cast<unsigned>(modulus_.degree());
}

Int FinField::cardinality() const {
    Int c;
    mpz_ui_pow_ui(c.get_mpz_t(), static_cast<unsigned long>(p_), k_);
    return c;
}

FqElem FinField::gen() const { return {FpPoly::x(p_) % modulus_}; }

FqElem FinField::inv(const FqElem& a) const {
    if (a.rep.is_zero()) fail(Err::DivisionByZero, "inverse of zero field element");
    // extended Euclid in F_p[y]
    FpPoly r0 = modulus_, r1 = a.rep;
    FpPoly t0(p_), t1 = FpPoly::one(p_);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divrem(r1);
        FpPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd (a unit), t0 * a = r0 mod modulus
    return {t0.scaled(invmod_u64(r0.leading(), p_)) % modulus_};
}

FqElem FinField::pow(const FqElem& a, const Int& e) const {
    if (e < 0) return pow(inv(a), -e);
    return {fp_powmod(a.rep, e, modulus_)};
}

FqElem FinField::frobenius(const FqElem& a) const {
    return {fp_powmod(a.rep, Int(static_cast<unsigned long>(p_)), modulus_)};
}

FqElem FinField::random(std::mt19937_64& rng) const {
    std::vector<uint64_t> c(k_);
    for (auto& x : c) x = rng() % p_;
    return {FpPoly(p_, std::move(c))};
}

std::string FinField::elem_to_string(const FqElem& a, const std::string& var) const {
    return a.rep.to_string(var);
}

FqPoly::FqPoly(const FinField& K, std::vector<FqElem> coeffs) : K_(K), c_(std::move(coeffs)) {
    normalize();
}

void FqPoly::normalize() {
    while (!c_.empty() && c_.back().rep.is_zero()) c_.pop_back();
}

FqPoly FqPoly::one(const FinField& K) { return FqPoly(K, {K.one()}); }

FqPoly FqPoly::x(const FinField& K) { return FqPoly(K, {K.zero(), K.one()}); }

FqElem FqPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return K_.zero();
    return c_[i];
}

const FqElem& FqPoly::leading() const {
    if (is_zero()) fail(Err::DomainError, "leading coefficient of zero polynomial");
    return c_.back();
}

bool FqPoly::is_monic() const { return !is_zero() && c_.back() == K_.one(); }

FqPoly FqPoly::operator+(const FqPoly& o) const {
    std::vector<FqElem> v(std::max(c_.size(), o.c_.size()), K_.zero());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] = K_.add(v[i], o.c_[i]);
    return FqPoly(K_, std::move(v));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
    std::vector<FqElem> v(std::max(c_.size(), o.c_.size()), K_.zero());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] = K_.sub(v[i], o.c_[i]);
    return FqPoly(K_, std::move(v));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
    if (is_zero() || o.is_zero()) return FqPoly(K_);
    std::vector<FqElem> v(c_.size() + o.c_.size() - 1, K_.zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (K_.is_zero(c_[i])) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] = K_.add(v[i + j], K_.mul(c_[i], o.c_[j]));
    }
    return FqPoly(K_, std::move(v));
}

std::pair<FqPoly, FqPoly> FqPoly::divrem(const FqPoly& d) const {
    if (d.is_zero()) fail(Err::DivisionByZero, "F_q polynomial division by zero");
    FqPoly r = *this;
    int dd = d.degree();
    if (degree() < dd) return {FqPoly(K_), r};
    std::vector<FqElem> q(degree() - dd + 1, K_.zero());
    FqElem ilc = K_.inv(d.leading());
    while (r.degree() >= dd) {
        int k = r.degree() - dd;
        FqElem c = K_.mul(r.leading(), ilc);
        q[k] = c;
        for (int i = 0; i <= dd; ++i) r.c_[k + i] = K_.sub(r.c_[k + i], K_.mul(c, d.c_[i]));
        r.normalize();
    }
    return {FqPoly(K_, std::move(q)), r};
}

bool FqPoly::operator<(const FqPoly& o) const {
    std::vector<std::vector<uint64_t>> a, b;
    for (const auto& e : c_) a.push_back(e.rep.coeffs());
    for (const auto& e : o.c_) b.push_back(e.rep.coeffs());
    return a < b;
}

FqPoly FqPoly::monic() const {
    if (is_zero() || is_monic()) return *this;
    FqElem s = K_.inv(leading());
    std::vector<FqElem> v = c_;
    for (auto& e : v) e = K_.mul(e, s);
    return FqPoly(K_, std::move(v));
}

FqPoly FqPoly::derivative() const {
    if (c_.size() <= 1) return FqPoly(K_);
    std::vector<FqElem> v(c_.size() - 1, K_.zero());
    for (size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = K_.mul(c_[i], K_.from_uint(i % K_.p()));
    return FqPoly(K_, std::move(v));
}

FqElem FqPoly::eval(const FqElem& a) const {
    FqElem r = K_.zero();
    for (int i = degree(); i >= 0; --i) r = K_.add(K_.mul(r, a), c_[i]);
    return r;
}

std::string FqPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (K_.is_zero(c_[i])) continue;
        if (!first) os << " + ";
        os << "(" << K_.elem_to_string(c_[i]) << ")";
        if (i > 0) {
            os << "*" << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

FqPoly fq_gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

FqPoly fq_powmod(const FqPoly& a, const Int& e, const FqPoly& m) {
    if (e < 0) fail(Err::DomainError, "negative exponent in fq_powmod");
    const FinField& K = m.field();
    FqPoly base = a % m;
    FqPoly r = FqPoly::one(K);
    if (e == 0) return r;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = (r * r) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * base) % m;
    }
    return r;
}

FqPoly fq_from_fp(const FinField& K, const FpPoly& f) {
    std::vector<FqElem> v;
    v.reserve(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) v.push_back(K.from_uint(f.coeff(i)));
    return FqPoly(K, std::move(v));
}

/* p-th root: exponents contract by p, coefficients map through a^{p^{k-1}} */
static FqPoly fq_pth_root(const FqPoly& f) {
    const FinField& K = f.field();
    uint64_t p = K.p();
    std::vector<FqElem> v;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) {
        FqElem a = f.coeff(i);
        for (unsigned j = 0; j + 1 < K.k(); ++j) a = K.frobenius(a);
        v.push_back(a);
    }
    return FqPoly(K, std::move(v));
}

static std::vector<FqFactor> fq_squarefree(const FqPoly& f0) {
    std::vector<FqFactor> out;
    FqPoly f = f0.monic();
    if (f.degree() == 0) return out;
    uint64_t p = f.field().p();
    FqPoly d = f.derivative();
    if (d.is_zero()) {
        for (auto& fac : fq_squarefree(fq_pth_root(f)))
            out.push_back({fac.factor, fac.multiplicity * static_cast<int>(p)});
        return out;
    }
    FqPoly c = fq_gcd(f, d);
    FqPoly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        FqPoly y = fq_gcd(w, c);
        FqPoly z = w / y;
        if (z.degree() > 0) out.push_back({z.monic(), i});
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (c.degree() > 0)
        for (auto& fac : fq_squarefree(fq_pth_root(c)))
            out.push_back({fac.factor, fac.multiplicity * static_cast<int>(p)});
    return out;
}

static std::vector<std::pair<FqPoly, int>> fq_distinct_degree(const FqPoly& f0) {
    FqPoly f = f0.monic();
    const FinField& K = f.field();
    std::vector<std::pair<FqPoly, int>> out;
    const FqPoly x = FqPoly::x(K);
    FqPoly h = x % f;
    Int q = K.cardinality();
    int d = 0;
    while (2 * (d + 1) <= f.degree()) {
        ++d;
        h = fq_powmod(h, q, f);
        FqPoly g = fq_gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

static FqPoly fq_random_below(const FinField& K, int deg_bound, std::mt19937_64& rng) {
    std::vector<FqElem> v(deg_bound, K.zero());
    for (auto& e : v) e = K.random(rng);
    return FqPoly(K, std::move(v));
}

static std::vector<FqPoly> fq_equal_degree(const FqPoly& f0, int d, std::mt19937_64& rng) {
    FqPoly f = f0.monic();
    const FinField& K = f.field();
    std::vector<FqPoly> out;
    if (f.degree() == d) {
        out.push_back(f);
        return out;
    }
    FqPoly splitter(K);
    while (true) {
        FqPoly a = fq_random_below(K, f.degree(), rng);
        if (a.is_zero()) continue;
        FqPoly g = fq_gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            splitter = g;
            break;
        }
        if (K.p() == 2) {
            // absolute trace map: a + a^2 + ... + a^{2^{dk-1}}
            FqPoly t(K), b = a % f;
            unsigned steps = static_cast<unsigned>(d) * K.k();
            for (unsigned i = 0; i < steps; ++i) {
                t = t + b;
                b = (b * b) % f;
            }
            g = fq_gcd(t, f);
        } else {
            Int qd;
            mpz_pow_ui(qd.get_mpz_t(), K.cardinality().get_mpz_t(), d);
            FqPoly b = fq_powmod(a, (qd - 1) / 2, f);
            g = fq_gcd(b - FqPoly::one(K), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            splitter = g;
            break;
        }
    }
    for (const auto& part : {splitter, f / splitter})
        for (auto& irr : fq_equal_degree(part, d, rng)) out.push_back(std::move(irr));
    return out;
}

std::vector<FqFactor> factor_mod_p(const FqPoly& f, uint64_t seed) {
    if (f.is_zero()) fail(Err::ZeroReduction, "factorization of zero polynomial");
    std::mt19937_64 rng(seed);
    std::vector<FqFactor> out;
    for (const auto& sq : fq_squarefree(f))
        for (const auto& [prod, d] : fq_distinct_degree(sq.factor))
            for (auto& irr : fq_equal_degree(prod, d, rng)) out.push_back({irr, sq.multiplicity});
    std::sort(out.begin(), out.end(),
              [](const FqFactor& a, const FqFactor& b) { return a.factor < b.factor; });
    return out;
}

std::vector<FqFactor> factor_mod_p(const UniPoly& f, const FinField& K, uint64_t seed) {
    FpPoly red = reduce_mod_p(f, K.p());
    if (red.is_zero()) fail(Err::ZeroReduction, "polynomial vanishes mod " + std::to_string(K.p()));
    return factor_mod_p(fq_from_fp(K, red), seed);
}

bool fq_is_irreducible(const FqPoly& f0) {
    FqPoly f = f0.monic();
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const FinField& K = f.field();
    const FqPoly x = FqPoly::x(K);
    Int q = K.cardinality();
    std::vector<int> prime_divs;
    int m = n;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_divs.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_divs.push_back(m);
    auto q_power = [&](int e) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), e);
        return r;
    };
    for (int d : prime_divs) {
        FqPoly h = fq_powmod(x, q_power(n / d), f);
        if (fq_gcd(h - x, f).degree() != 0) return false;
    }
    FqPoly h = fq_powmod(x, q_power(n), f);
    return (h - x).is_zero();
}

}  // namespace hol
