#include "hol/fppoly.hpp"

#include <algorithm>
#include <sstream>

#include "hol/errors.hpp"

namespace hol {

FpPoly::FpPoly(uint64_t p, std::vector<uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (uint64_t& c : c_) c %= p_;
    normalize();
}

void FpPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FpPoly::check_same(const FpPoly& o) const {
    if (p_ != o.p_) fail(Err::DomainError, "mixed moduli in F_p arithmetic");
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    check_same(o);
    FpPoly r(p_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = (r.c_[i] + o.c_[i]) % p_;
    r.normalize();
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    check_same(o);
    FpPoly r(p_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = (r.c_[i] + p_ - o.c_[i]) % p_;
    r.normalize();
    return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return FpPoly(p_);
    FpPoly r(p_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = (r.c_[i + j] + mulmod_u64(c_[i], o.c_[j], p_)) % p_;
    }
    r.normalize();
    return r;
}

std::pair<FpPoly, FpPoly> FpPoly::divrem(const FpPoly& d) const {
    check_same(d);
    if (d.is_zero()) fail(Err::DivisionByZero, "F_p polynomial division by zero");
    FpPoly r = *this;
    int dd = d.degree();
    if (degree() < dd) return {FpPoly(p_), r};
    FpPoly q(p_);
    q.c_.assign(degree() - dd + 1, 0);
    uint64_t inv_lc = invmod_u64(d.leading(), p_);
    while (r.degree() >= dd) {
        int k = r.degree() - dd;
        uint64_t c = mulmod_u64(r.leading(), inv_lc, p_);
        q.c_[k] = c;
        for (int i = 0; i <= dd; ++i) {
            uint64_t sub = mulmod_u64(c, d.c_[i], p_);
            r.c_[k + i] = (r.c_[k + i] + p_ - sub) % p_;
        }
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

FpPoly FpPoly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(invmod_u64(leading(), p_));
}

FpPoly FpPoly::scaled(uint64_t s) const {
    FpPoly r = *this;
    s %= p_;
    for (uint64_t& c : r.c_) c = mulmod_u64(c, s, p_);
    r.normalize();
    return r;
}

FpPoly FpPoly::derivative() const {
    FpPoly r(p_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = mulmod_u64(c_[i], i % p_, p_);
    r.normalize();
    return r;
}

uint64_t FpPoly::eval(uint64_t x) const {
    uint64_t r = 0;
    x %= p_;
    for (int i = degree(); i >= 0; --i) r = (mulmod_u64(r, x, p_) + c_[i]) % p_;
    return r;
}

std::string FpPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i > 0) {
            if (c_[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return (a * b) % m; }

FpPoly fp_powmod(const FpPoly& a, const Int& e, const FpPoly& m) {
    if (e < 0) fail(Err::DomainError, "negative exponent in fp_powmod");
    FpPoly base = a % m;
    FpPoly r = FpPoly::one(m.p());
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = fp_mulmod(r, r, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mulmod(r, base, m);
    }
    return r;
}

FpPoly fp_frobenius_pow(const FpPoly& a, unsigned k, const FpPoly& m) {
    FpPoly r = a % m;
    Int p(static_cast<unsigned long>(m.p()));
    for (unsigned i = 0; i < k; ++i) r = fp_powmod(r, p, m);
    return r;
}

FpPoly reduce_mod_p(const UniPoly& f, uint64_t p) {
    std::vector<uint64_t> c(f.degree() + 1, 0);
    for (int i = 0; i <= f.degree(); ++i) {
        const Rat& q = f.coeff(i);
        Int num = q.get_num() % Int(static_cast<unsigned long>(p));
        if (num < 0) num += static_cast<unsigned long>(p);
        Int den = q.get_den() % Int(static_cast<unsigned long>(p));
        if (den == 0) fail(Err::NotPIntegral, "denominator divisible by " + std::to_string(p));
        uint64_t n64 = num.get_ui(), d64 = den.get_ui();
        c[i] = mulmod_u64(n64, invmod_u64(d64, p), p);
    }
    return FpPoly(p, std::move(c));
}

UniPoly lift_to_z(const FpPoly& f) {
    std::vector<Rat> c;
    c.reserve(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) c.emplace_back(static_cast<unsigned long>(f.coeff(i)));
    return UniPoly(std::move(c));
}

/* p-th root of a polynomial whose exponents are all multiples of p
   (coefficients are in F_p, so the root just contracts exponents) */
static FpPoly fp_pth_root(const FpPoly& f) {
    uint64_t p = f.p();
    std::vector<uint64_t> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
    return FpPoly(p, std::move(c));
}

std::vector<FpFactor> fp_squarefree_decomposition(const FpPoly& f0) {
    if (f0.is_zero()) fail(Err::ZeroReduction, "squarefree decomposition of zero");
    std::vector<FpFactor> out;
    FpPoly f = f0.monic();
    if (f.degree() == 0) return out;
    uint64_t p = f.p();

    FpPoly d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p) = g-contracted ^ p
        for (auto& fac : fp_squarefree_decomposition(fp_pth_root(f)))
            out.push_back({fac.factor, fac.multiplicity * static_cast<int>(p)});
        return out;
    }
    FpPoly c = fp_gcd(f, d);
    FpPoly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        FpPoly y = fp_gcd(w, c);
        FpPoly z = w / y;
        if (z.degree() > 0) out.push_back({z.monic(), i});
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& fac : fp_squarefree_decomposition(fp_pth_root(c)))
            out.push_back({fac.factor, fac.multiplicity * static_cast<int>(p)});
    }
    return out;
}

std::vector<std::pair<FpPoly, int>> fp_distinct_degree(const FpPoly& f0) {
    FpPoly f = f0.monic();
    uint64_t p = f.p();
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly h = FpPoly::x(p) % f;
    const FpPoly x = FpPoly::x(p);
    Int pz(static_cast<unsigned long>(p));
    int d = 0;
    while (2 * (d + 1) <= f.degree()) {
        ++d;
        h = fp_powmod(h, pz, f);
        FpPoly g = fp_gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

std::vector<int> fp_factor_degrees_squarefree(const FpPoly& f) {
    std::vector<int> degs;
    for (const auto& [prod, d] : fp_distinct_degree(f))
        for (int i = 0; i < prod.degree() / d; ++i) degs.push_back(d);
    std::sort(degs.rbegin(), degs.rend());
    return degs;
}

static FpPoly random_poly_below(uint64_t p, int deg_bound, std::mt19937_64& rng) {
    std::vector<uint64_t> c(deg_bound);
    for (auto& x : c) x = rng() % p;
    return FpPoly(p, std::move(c));
}

std::vector<FpPoly> fp_equal_degree(const FpPoly& f0, int d, std::mt19937_64& rng) {
    FpPoly f = f0.monic();
    uint64_t p = f.p();
    std::vector<FpPoly> out;
    if (f.degree() == d) {
        out.push_back(f);
        return out;
    }
    FpPoly splitter(p);
    while (true) {
        FpPoly a = random_poly_below(p, f.degree(), rng);
        if (a.degree() < 1) continue;
        FpPoly g = fp_gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            splitter = g;
            break;
        }
        if (p == 2) {
            // trace map over F_2: a + a^2 + a^4 + ... (d terms)
            FpPoly t(p), b = a % f;
            for (int i = 0; i < d; ++i) {
                t = t + b;
                b = fp_mulmod(b, b, f);
            }
            g = fp_gcd(t, f);
        } else {
            Int pd;
            mpz_pow_ui(pd.get_mpz_t(), Int(static_cast<unsigned long>(p)).get_mpz_t(), d);
            Int e = (pd - 1) / 2;
            FpPoly b = fp_powmod(a, e, f);
            g = fp_gcd(b - FpPoly::one(p), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            splitter = g;
            break;
        }
    }
    for (auto& part : {splitter, f / splitter})
        for (auto& irr : fp_equal_degree(part, d, rng)) out.push_back(std::move(irr));
    return out;
}

std::vector<FpFactor> fp_factor(const FpPoly& f, uint64_t seed) {
    if (f.is_zero()) fail(Err::ZeroReduction, "factorization of zero polynomial");
    std::mt19937_64 rng(seed);
    std::vector<FpFactor> out;
    for (const auto& sq : fp_squarefree_decomposition(f)) {
        for (const auto& [prod, d] : fp_distinct_degree(sq.factor)) {
            for (auto& irr : fp_equal_degree(prod, d, rng)) out.push_back({irr, sq.multiplicity});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FpFactor& a, const FpFactor& b) { return a.factor < b.factor; });
    return out;
}

bool fp_is_irreducible(const FpPoly& f0) {
    // Rabin's test
    FpPoly f = f0.monic();
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    uint64_t p = f.p();
    const FpPoly x = FpPoly::x(p);
    std::vector<int> prime_divs;
    int m = n;
    for (int q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            prime_divs.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) prime_divs.push_back(m);
    for (int q : prime_divs) {
        FpPoly h = fp_frobenius_pow(x, n / q, f);
        if (fp_gcd(h - x, f).degree() != 0) return false;
    }
    FpPoly h = fp_frobenius_pow(x, n, f);
    return (h - x).is_zero();
}

}  // namespace hol
