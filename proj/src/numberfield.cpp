#include "hol/numberfield.hpp"

#include <algorithm>
#include <map>

#include "hol/errors.hpp"
#include "hol/ratmat.hpp"

namespace hol {

struct NumberField::Data {
    UniPoly poly;
    IrreducibilityCertificate cert;
    mutable std::optional<std::pair<int, int>> sig;
};

NumberField NumberField::create(const UniPoly& f, int prime_budget) {
    if (f.degree() < 1) fail(Err::DomainError, "number field needs degree >= 1");
    if (!f.is_monic() || !f.is_integral())
        fail(Err::DomainError, "defining polynomial must be monic and integral");
    IrreducibilityCertificate cert = certify_irreducible_over_q(f, prime_budget);
    if (cert.verdict == Verdict::Reducible)
        fail(Err::NotIrreducible, f.to_string() + " is reducible: " + cert.describe());
    if (cert.verdict == Verdict::Inconclusive)
        fail(Err::IrreducibilityInconclusive,
             "could not certify " + f.to_string() + ": " + cert.describe());
    NumberField K;
    K.d_ = std::make_shared<Data>(Data{f, std::move(cert), std::nullopt});
    return K;
}

NumberField NumberField::from_known_irreducible(const UniPoly& f, const std::string& reason) {
    if (f.degree() < 1 || !f.is_monic() || !f.is_integral())
        fail(Err::DomainError, "defining polynomial must be monic integral of degree >= 1");
    NumberField K;
    K.d_ = std::make_shared<Data>(
        Data{f, IrreducibilityCertificate::structural_certificate(reason), std::nullopt});
    return K;
}

int NumberField::degree() const { return d_->poly.degree(); }
const UniPoly& NumberField::poly() const { return d_->poly; }
const IrreducibilityCertificate& NumberField::certificate() const { return d_->cert; }

bool NumberField::same_field(const NumberField& o) const {
    return d_ == o.d_ || d_->poly == o.d_->poly;
}

NFElement NumberField::zero() const { return from_rational(Rat(0)); }
NFElement NumberField::one() const { return from_rational(Rat(1)); }

NFElement NumberField::gen() const {
    std::vector<Rat> c(degree(), Rat(0));
    if (degree() == 1) {
        // theta is the rational root of the linear defining polynomial
        c[0] = -poly().coeff(0);
    } else {
        c[1] = 1;
    }
    return NFElement(*this, std::move(c));
}

NFElement NumberField::from_rational(const Rat& r) const {
    std::vector<Rat> c(degree(), Rat(0));
    c[0] = r;
    return NFElement(*this, std::move(c));
}

NFElement NumberField::element(std::vector<Rat> coords) const {
    if (static_cast<int>(coords.size()) != degree())
        fail(Err::DomainError, "coordinate vector has wrong length");
    return NFElement(*this, std::move(coords));
}

NFElement NumberField::from_poly(const UniPoly& g) const {
    UniPoly r = g % poly();
    std::vector<Rat> c(degree(), Rat(0));
    for (int i = 0; i <= r.degree(); ++i) c[i] = r.coeff(i);
    return NFElement(*this, std::move(c));
}

/* ---- NFElement ---- */

NFElement::NFElement(NumberField parent, std::vector<Rat> coords)
    : parent_(std::move(parent)), coords_(std::move(coords)) {}

UniPoly NFElement::as_poly() const { return UniPoly(coords_); }

bool NFElement::is_zero() const {
    for (const Rat& c : coords_)
        if (c != 0) return false;
    return true;
}

bool NFElement::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rat NFElement::rational_value() const {
    if (!is_rational()) fail(Err::DomainError, "element is not rational");
    return coords_.empty() ? Rat(0) : coords_[0];
}

static void check_parents(const NFElement& a, const NFElement& b) {
    if (!a.parent().same_field(b.parent()))
        fail(Err::MixedParents, "elements of different number fields");
}

NFElement NFElement::operator+(const NFElement& o) const {
    check_parents(*this, o);
    std::vector<Rat> c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return NFElement(parent_, std::move(c));
}

NFElement NFElement::operator-(const NFElement& o) const { return *this + (-o); }

NFElement NFElement::operator-() const {
    std::vector<Rat> c = coords_;
    for (Rat& x : c) x = -x;
    return NFElement(parent_, std::move(c));
}

NFElement NFElement::operator*(const NFElement& o) const {
    check_parents(*this, o);
    return parent_.from_poly(as_poly() * o.as_poly());
}

NFElement NFElement::operator*(const Rat& s) const {
    std::vector<Rat> c = coords_;
    for (Rat& x : c) x *= s;
    return NFElement(parent_, std::move(c));
}

NFElement NFElement::inverse() const {
    if (is_zero()) fail(Err::DivisionByZero, "inverse of zero field element");
    // extended Euclid with the defining polynomial
    UniPoly r0 = parent_.poly(), r1 = as_poly();
    UniPoly t0, t1(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divrem(r1);
        UniPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant (defining polynomial irreducible)
    if (r0.degree() != 0) fail(Err::DomainError, "defining polynomial not irreducible");
    return parent_.from_poly(t0 * (Rat(1) / r0.coeff(0)));
}

NFElement NFElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    NFElement r = parent_.one();
    NFElement b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool NFElement::operator==(const NFElement& o) const {
    return parent_.same_field(o.parent_) && coords_ == o.coords_;
}

UniPoly NFElement::minimal_polynomial() const {
    int n = parent_.degree();
    LinearSpan span(n);
    NFElement p = parent_.one();
    for (int d = 0; d <= n; ++d) {
        if (auto comb = span.insert(p.coords())) {
            // sum comb[j] * x^j = 0 with comb[d] = 1
            return UniPoly(*comb);
        }
        p = p * *this;
    }
    fail(Err::DomainError, "no minimal polynomial found (inconsistent field)");
}

NFElement eval_at(const UniPoly& g, const NFElement& x) {
    NFElement r = x.parent().zero();
    for (int i = g.degree(); i >= 0; --i) r = r * x + x.parent().from_rational(g.coeff(i));
    return r;
}

/* ---- NFAutomorphism ---- */

NFAutomorphism::NFAutomorphism(NumberField parent, NFElement image, int order, std::string name)
    : parent_(std::move(parent)), image_(std::move(image)), order_(order), name_(std::move(name)) {}

bool NFAutomorphism::is_identity() const { return image_ == parent_.gen(); }

const std::vector<std::vector<Rat>>& NFAutomorphism::columns() const {
    if (!cols_) {
        int n = parent_.degree();
        std::vector<std::vector<Rat>> cols;
        cols.reserve(n);
        NFElement p = parent_.one();
        for (int j = 0; j < n; ++j) {
            cols.push_back(p.coords());
            p = p * image_;
        }
        cols_ = std::make_shared<const std::vector<std::vector<Rat>>>(std::move(cols));
    }
    return *cols_;
}

NFElement NFAutomorphism::apply(const NFElement& x) const {
    if (!x.parent().same_field(parent_)) fail(Err::WrongField, "element not in this automorphism's field");
    const auto& cols = columns();
    int n = parent_.degree();
    std::vector<Rat> y(n, Rat(0));
    const auto& xs = x.coords();
    for (int j = 0; j < n; ++j) {
        if (xs[j] == 0) continue;
        for (int i = 0; i < n; ++i)
            if (cols[j][i] != 0) y[i] += xs[j] * cols[j][i];
    }
    return parent_.element(std::move(y));
}

NFAutomorphism NFAutomorphism::compose(const NFAutomorphism& o) const {
    if (!parent_.same_field(o.parent_)) fail(Err::WrongField, "automorphisms of different fields");
    // (this ∘ o)(theta) = this(o(theta))
    NFElement img = apply(o.image_);
    return NFAutomorphism(parent_, img, -1, "");
}

int NFAutomorphism::order() const {
    if (order_ < 0) {
        NFElement gen = parent_.gen();
        NFElement cur = image_;
        int ord = 1;
        while (!(cur == gen)) {
            cur = apply(cur);
            ++ord;
            if (ord > parent_.degree())
                fail(Err::DomainError, "automorphism order exceeds field degree");
        }
        order_ = ord;
    }
    return order_;
}

NFAutomorphism NFAutomorphism::inverse() const { return power(order() - 1); }

NFAutomorphism NFAutomorphism::power(int k) const {
    int m = order();
    k %= m;
    if (k < 0) k += m;
    NFAutomorphism r = identity_automorphism(parent_);
    for (int i = 0; i < k; ++i) r = r.compose(*this);
    return r;
}

bool NFAutomorphism::operator==(const NFAutomorphism& o) const {
    return parent_.same_field(o.parent_) && image_ == o.image_;
}

NFAutomorphism NFAutomorphism::named(const std::string& n) const {
    NFAutomorphism a = *this;
    a.name_ = n;
    return a;
}

NFAutomorphism verify_automorphism(const NumberField& K, const NFElement& img) {
    if (!img.parent().same_field(K)) fail(Err::WrongField, "image lies in a different field");
    NFElement val = eval_at(K.poly(), img);
    if (!val.is_zero())
        fail(Err::NotARoot, "generator image " + img.to_string() + " is not a root of " + K.poly().to_string());
    NFAutomorphism a(K, img, -1, "");
    a.order();  // computed and cached now, capped by the degree
    return a;
}

NFAutomorphism identity_automorphism(const NumberField& K) {
    return NFAutomorphism(K, K.gen(), 1, "1");
}

/* ---- AutGroup ---- */

AutGroup::AutGroup(NumberField f, std::vector<NFAutomorphism> e)
    : field_(std::move(f)), elems_(std::move(e)) {}

AutGroup AutGroup::generate(const NumberField& K, const std::vector<NFAutomorphism>& gens) {
    for (const auto& g : gens)
        if (!g.parent().same_field(K)) fail(Err::WrongField, "generator of a different field");
    std::vector<NFAutomorphism> elems{identity_automorphism(K)};
    std::vector<std::vector<int>> words{{}};        // each element as a word in the generators
    std::vector<std::vector<int>> links{{}};        // links[i][g] = index of elems[i] ∘ gens[g]
    links[0].assign(gens.size(), -1);
    auto find = [&](const NFAutomorphism& a) {
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == a) return static_cast<int>(i);
        return -1;
    };
    bool single_gen = gens.size() == 1 && !gens[0].name().empty();
    for (size_t i = 0; i < elems.size(); ++i) {
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            NFAutomorphism next = elems[i].compose(gens[gi]);
            int k = find(next);
            if (k < 0) {
                std::string nm;
                if (single_gen) {
                    nm = elems.size() == 1 ? gens[0].name()
                                           : gens[0].name() + "^" + std::to_string(elems.size());
                } else if (!gens[gi].name().empty()) {
                    nm = elems[i].name().empty() || elems[i].name() == "1"
                             ? gens[gi].name()
                             : elems[i].name() + "*" + gens[gi].name();
                }
                k = static_cast<int>(elems.size());
                elems.push_back(next.named(nm));
                std::vector<int> w = words[i];
                w.push_back(static_cast<int>(gi));
                words.push_back(std::move(w));
                links.emplace_back(gens.size(), -1);
                if (static_cast<int>(elems.size()) > K.degree())
                    fail(Err::ClosureExceedsDegree,
                         "automorphism closure exceeds the field degree " + std::to_string(K.degree()));
            }
            links[i][gi] = k;
        }
    }
    AutGroup g(K, std::move(elems));
    // multiplication table by following generator links through words;
    // no further polynomial composition needed
    int n = g.size();
    g.table_.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int cur = i;
            for (int w : words[j]) cur = links[cur][w];
            g.table_[i][j] = cur;
        }
    return g;
}

int AutGroup::index_of(const NFAutomorphism& a) const {
    for (int i = 0; i < size(); ++i)
        if (elems_[i] == a) return i;
    return -1;
}

int AutGroup::inverse_of(int i) const {
    for (int j = 0; j < size(); ++j)
        if (table_[i][j] == 0) return j;
    fail(Err::DomainError, "element without inverse");
}

std::vector<int> AutGroup::element_orders() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        int k = i, ord = 1;
        while (k != 0) {
            k = table_[k][i];
            ++ord;
        }
        out.push_back(ord);
    }
    return out;
}

bool AutGroup::is_cyclic() const {
    auto ords = element_orders();
    return std::find(ords.begin(), ords.end(), size()) != ords.end();
}

AutGroup AutGroup::subgroup(std::vector<int> element_indices) const {
    std::vector<NFAutomorphism> gens;
    for (int i : element_indices) gens.push_back(elems_[i]);
    return generate(field_, gens);
}

/* ---- fixed fields ---- */

namespace {

// smallest positive d such that substituting x -> x/d and scaling by d^deg
// gives an integral polynomial; monic input stays monic
Int integral_scale(const UniPoly& f) {
    Int d = 1;
    int m = f.degree();
    for (int i = 0; i < m; ++i) {
        Rat c = f.coeff(i);
        // need den(c) | d^(m-i); lcm with den(c) is enough (not always minimal)
        Int l;
        mpz_lcm(l.get_mpz_t(), d.get_mpz_t(), c.get_den().get_mpz_t());
        d = l;
    }
    return d;
}

UniPoly rescale_generator_poly(const UniPoly& f, const Int& d) {
    // g(x) = d^m f(x/d)
    int m = f.degree();
    std::vector<Rat> c(m + 1);
    Int pw = 1;
    for (int i = m; i >= 0; --i) {
        c[i] = f.coeff(i) * Rat(pw);
        pw *= d;
    }
    return UniPoly(std::move(c));
}

}  // namespace

std::pair<NumberField, NFElement> fixed_field(const NumberField& K, const AutGroup& H) {
    if (!H.field().same_field(K)) fail(Err::WrongField, "subgroup acts on a different field");
    int n = K.degree();
    if (n % H.size() != 0) fail(Err::DomainError, "group order does not divide the degree");
    int m = n / H.size();

    auto trace = [&](const NFElement& x) {
        NFElement t = K.zero();
        for (int i = 0; i < H.size(); ++i) t = t + H.at(i).apply(x);
        return t;
    };

    std::vector<NFElement> schedule;
    NFElement theta = K.gen();
    NFElement p = theta;
    for (int j = 1; j <= std::max(1, n - 1); ++j) {
        schedule.push_back(p);
        p = p * theta;
    }
    NFElement theta2 = theta * theta;
    for (int c = 1; c <= 8 * n; ++c) schedule.push_back(theta + theta2 * Rat(c));

    for (const NFElement& cand : schedule) {
        NFElement t = trace(cand);
        UniPoly mp = t.minimal_polynomial();
        if (mp.degree() != m) continue;
        Int d = integral_scale(mp);
        UniPoly def = rescale_generator_poly(mp, d);
        NumberField sub = NumberField::from_known_irreducible(def, "minimal polynomial of a fixed-field generator");
        return {sub, t * Rat(d)};
    }
    fail(Err::GeneratorSearchExhausted, "fixed-field generator schedule exhausted");
}

/* ---- signature by Sturm chains ---- */

namespace {

int sign_at_inf(const UniPoly& f, bool plus) {
    if (f.is_zero()) return 0;
    Rat lc = f.leading();
    int s = lc > 0 ? 1 : -1;
    if (!plus && (f.degree() & 1)) s = -s;
    return s;
}

int sign_changes(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

std::pair<int, int> NumberField::signature() const {
    if (d_->sig) return *d_->sig;
    UniPoly f = d_->poly;
    // Sturm chain; the defining polynomial is squarefree
    std::vector<UniPoly> chain{f, f.derivative()};
    while (!chain.back().is_zero()) {
        UniPoly r = -(chain[chain.size() - 2] % chain.back());
        // scaling by a positive rational keeps the sign pattern and the
        // coefficients small
        if (!r.is_zero()) {
            r = r * Rat(r.denominator_lcm());
            r = r * (Rat(1) / Rat(r.integer_content()));
        }
        chain.push_back(std::move(r));
    }
    chain.pop_back();
    std::vector<int> at_minus, at_plus;
    for (const UniPoly& g : chain) {
        at_minus.push_back(sign_at_inf(g, false));
        at_plus.push_back(sign_at_inf(g, true));
    }
    int r1 = sign_changes(at_minus) - sign_changes(at_plus);
    int r2 = (degree() - r1) / 2;
    d_->sig = {r1, r2};
    return *d_->sig;
}

bool same_quadratic_field(const UniPoly& f, const UniPoly& g) {
    for (const UniPoly* h : {&f, &g}) {
        if (h->degree() != 2) fail(Err::WrongDegree, "expected a quadratic polynomial");
        if (!h->is_monic() || !h->is_integral())
            fail(Err::DomainError, "expected a monic integral quadratic");
        if (is_perfect_square(rat_to_integer(discriminant(*h))))
            fail(Err::DomainError, "quadratic is reducible");
    }
    Int df = rat_to_integer(discriminant(f)), dg = rat_to_integer(discriminant(g));
    return squarefree_part(df) == squarefree_part(dg);
}

/* ---- subfield coordinates and restriction ---- */

std::optional<std::vector<Rat>> subfield_coordinates(const NFElement& gen_in_K, int sub_degree,
                                                     const NFElement& x) {
    const NumberField& K = gen_in_K.parent();
    if (!x.parent().same_field(K)) fail(Err::MixedParents, "elements of different fields");
    std::vector<RatVec> cols;
    NFElement p = K.one();
    for (int j = 0; j < sub_degree; ++j) {
        cols.push_back(p.coords());
        p = p * gen_in_K;
    }
    LinearSolver solver(K.degree(), std::move(cols));
    return solver.solve(x.coords());
}

NFAutomorphism restrict_automorphism(const NumberField& sub, const NFElement& gen_in_K,
                                     const NFAutomorphism& a) {
    NFElement y = a.apply(gen_in_K);
    auto coords = subfield_coordinates(gen_in_K, sub.degree(), y);
    if (!coords)
        fail(Err::DomainError, "automorphism does not stabilize the subfield");
    return verify_automorphism(sub, sub.element(*coords));
}

}  // namespace hol
