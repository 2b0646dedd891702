#include "hol/unipoly.hpp"

#include <sstream>

#include "hol/errors.hpp"

namespace hol {

UniPoly::UniPoly(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<long> ints) {
    for (long v : ints) c_.emplace_back(v);
    normalize();
}

UniPoly UniPoly::x() { return monomial(1); }

UniPoly UniPoly::monomial(int deg, const Rat& c) {
    if (c == 0) return UniPoly();
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_ints(const std::vector<long>& c) {
    std::vector<Rat> v;
    v.reserve(c.size());
    for (long x : c) v.emplace_back(x);
    return UniPoly(std::move(v));
}

void UniPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[i];
}

Rat UniPoly::leading() const {
    if (is_zero()) fail(Err::DomainError, "leading coefficient of zero polynomial");
    return c_.back();
}

bool UniPoly::is_monic() const { return !is_zero() && c_.back() == 1; }

bool UniPoly::is_integral() const {
    for (const Rat& c : c_)
        if (!rat_is_integer(c)) return false;
    return true;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (Rat& c : r.c_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    if (s == 0) return UniPoly();
    UniPoly r = *this;
    for (Rat& c : r.c_) c *= s;
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
    if (d.is_zero()) fail(Err::DivisionByZero, "polynomial division by zero");
    UniPoly r = *this;
    int dd = d.degree();
    if (degree() < dd) return {UniPoly(), r};
    std::vector<Rat> q(degree() - dd + 1, Rat(0));
    Rat lc = d.leading();
    while (r.degree() >= dd) {
        int k = r.degree() - dd;
        Rat c = r.leading() / lc;
        q[k] = c;
        // r -= c x^k d
        for (int i = 0; i <= dd; ++i) r.c_[k + i] -= c * d.c_[i];
        r.normalize();
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly r;
    for (int i = degree(); i >= 0; --i) r = r * inner + UniPoly(c_[i]);
    return r;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat r(0);
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
}

Int UniPoly::denominator_lcm() const {
    Int d = 1;
    for (const Rat& c : c_) {
        Int l;
        mpz_lcm(l.get_mpz_t(), d.get_mpz_t(), c.get_den().get_mpz_t());
        d = l;
    }
    return d;
}

Int UniPoly::integer_content() const {
    if (!is_integral()) fail(Err::DomainError, "content of non-integral polynomial");
    Int g = 0;
    for (const Rat& c : c_) {
        Int gg;
        mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        g = gg;
    }
    return g;
}

UniPoly UniPoly::primitive_integral() const {
    if (is_zero()) return *this;
    UniPoly f = *this * Rat(denominator_lcm());
    Int ct = f.integer_content();
    f = f * (Rat(1) / Rat(ct));
    if (f.leading() < 0) f = -f;
    return f;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

/* ---- resultant via subresultant PRS, on integer coefficient vectors ---- */

namespace {

using ZPoly = std::vector<Int>;  // ascending, normalized

void znorm(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

Int zcontent(const ZPoly& f) {
    Int g = 0;
    for (const Int& c : f) {
        Int gg;
        mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        g = gg;
    }
    return g;
}

void zdiv_scalar(ZPoly& f, const Int& d) {
    for (Int& c : f) {
        Int q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        c = q;
    }
}

// pseudo-remainder: lc(B)^{deg A - deg B + 1} * A = Q*B + R
ZPoly zprem(ZPoly A, const ZPoly& B) {
    int db = zdeg(B);
    const Int& lb = B.back();
    int e = zdeg(A) - db + 1;
    while (zdeg(A) >= db && !A.empty()) {
        Int la = A.back();
        int k = zdeg(A) - db;
        for (int i = 0; i < static_cast<int>(A.size()); ++i) A[i] *= lb;
        for (int i = 0; i <= db; ++i) A[k + i] -= la * B[i];
        znorm(A);
        --e;
    }
    if (e > 0) {
        Int m;
        mpz_pow_ui(m.get_mpz_t(), lb.get_mpz_t(), e);
        for (Int& c : A) c *= m;
    }
    return A;
}

Int zpow(const Int& b, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// resultant of integral polynomials (Cohen, Alg. 3.3.7)
Int zresultant(ZPoly A, ZPoly B) {
    int s = 1;
    if (zdeg(A) < zdeg(B)) {
        if ((zdeg(A) & 1) && (zdeg(B) & 1)) s = -s;
        std::swap(A, B);
    }
    if (zdeg(B) < 0) fail(Err::DomainError, "resultant with zero polynomial");
    if (zdeg(A) == 0) return Int(1);
    if (zdeg(B) == 0) return Int(s) * zpow(B[0], zdeg(A));

    Int a = zcontent(A), b = zcontent(B);
    zdiv_scalar(A, a);
    zdiv_scalar(B, b);
    Int t = zpow(a, zdeg(B)) * zpow(b, zdeg(A));
    Int g = 1, h = 1;
    while (true) {
        long delta = zdeg(A) - zdeg(B);
        if ((zdeg(A) & 1) && (zdeg(B) & 1)) s = -s;
        ZPoly R = zprem(A, B);
        A = std::move(B);
        // B = R / (g h^delta)
        B = std::move(R);
        if (!B.empty()) {
            Int d = g * zpow(h, delta);
            zdiv_scalar(B, d);
        }
        g = A.back();
        if (delta > 0) {
            Int num = zpow(g, delta);
            Int den = zpow(h, delta - 1);
            Int q;
            mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            h = q;
        }
        if (zdeg(B) <= 0) break;
    }
    if (B.empty()) return Int(0);  // common factor of positive degree
    long dA = zdeg(A);
    Int num = zpow(B[0], dA);
    Int den = zpow(h, dA - 1);
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    h = q;
    return Int(s) * t * h;
}

}  // namespace

Rat resultant(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) fail(Err::DomainError, "resultant requires nonzero arguments");
    // clear denominators: res(a,b) = res(da*a, db*b) / (da^deg b * db^deg a)
    Int da = a.denominator_lcm(), db = b.denominator_lcm();
    ZPoly A, B;
    for (const Rat& c : a.coeffs()) A.push_back(rat_to_integer(c * Rat(da)));
    for (const Rat& c : b.coeffs()) B.push_back(rat_to_integer(c * Rat(db)));
    Int r = zresultant(std::move(A), std::move(B));
    Rat scale = Rat(zpow(da, b.degree())) * Rat(zpow(db, a.degree()));
    return Rat(r) / scale;
}

Rat discriminant(const UniPoly& f) {
    if (f.degree() < 1) fail(Err::DomainError, "discriminant needs degree >= 1");
    if (f.degree() == 1) return Rat(1);
    long n = f.degree();
    Rat r = resultant(f, f.derivative()) / f.leading();
    if (((n * (n - 1)) / 2) & 1) r = -r;
    return r;
}

}  // namespace hol
