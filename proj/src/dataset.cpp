#include "hol/dataset.hpp"

#include <algorithm>
#include <set>

#include "hol/cyclotomic.hpp"
#include "hol/errors.hpp"

namespace hol {

GaloisSetup Dataset::setup(uint64_t seed) const {
    AutGroup G = AutGroup::generate(base_field, galois_generators);
    return GaloisSetup::build(base_field, G, supported_primes, seed);
}

int group_element_by_word(const AutGroup& g, const std::string& word) {
    for (int i = 0; i < g.size(); ++i)
        if (g.at(i).name() == word) return i;
    fail(Err::SchemaViolation, "no group element named '" + word + "'");
}

Dataset dataset_from_json(const json& j) {
    for (const char* key : {"base_field", "galois_generators", "supported_primes", "constituents"})
        if (!j.contains(key)) fail(Err::SchemaViolation, std::string("dataset missing key '") + key + "'");

    Dataset d;
    d.base_field = field_from_json(j["base_field"]);
    for (const auto& gj : j["galois_generators"]) {
        if (!gj.contains("name")) fail(Err::SchemaViolation, "galois generator without a name");
        d.galois_generators.push_back(
            automorphism_from_json(d.base_field, gj).named(gj["name"].get<std::string>()));
    }
    if (d.galois_generators.empty()) fail(Err::SchemaViolation, "no galois generators");
    for (const auto& pj : j["supported_primes"]) d.supported_primes.push_back(pj.get<uint64_t>());

    std::set<std::string> labels;
    for (const auto& cj : j["constituents"]) {
        for (const char* key : {"label", "dim", "coeff_field", "aut_generators", "eigenvalues"})
            if (!cj.contains(key))
                fail(Err::SchemaViolation, std::string("constituent missing key '") + key + "'");
        EigensystemRecord r;
        r.label = cj["label"].get<std::string>();
        if (!labels.insert(r.label).second)
            fail(Err::SchemaViolation, "duplicate constituent label " + r.label);
        r.dim = cj["dim"].get<int>();
        r.coeff_field = field_from_json(cj["coeff_field"]);
        if (r.dim != r.coeff_field.degree())
            fail(Err::SchemaViolation, "constituent " + r.label +
                                           ": dimension must equal the coefficient-field degree");
        for (const auto& aj : cj["aut_generators"]) {
            std::string name = aj.contains("name") ? aj["name"].get<std::string>() : "";
            r.aut_generators.push_back(automorphism_from_json(r.coeff_field, aj).named(name));
        }
        if (cj.contains("atkin_lehner") && !cj["atkin_lehner"].is_null()) {
            int s = cj["atkin_lehner"].get<int>();
            if (s != 1 && s != -1) fail(Err::SchemaViolation, "atkin_lehner must be +1 or -1");
            r.atkin_lehner = s;
        }
        for (const auto& [l, ej] : cj["eigenvalues"].items())
            r.eigenvalues.emplace(l, element_from_json(r.coeff_field, ej));
        if (r.eigenvalues.empty()) fail(Err::SchemaViolation, "constituent without eigenvalues");
        r.find_generator_eigenvalue();
        d.records.push_back(std::move(r));
    }

    if (j.contains("identities")) {
        for (const auto& ij : j["identities"]) {
            Dataset::Identity id;
            id.sigma_word = ij["sigma_word"].get<std::string>();
            id.from = ij["from"].get<std::string>();
            id.to = ij["to"].get<std::string>();
            if (ij.contains("tau_image") && !ij["tau_image"].is_null()) {
                const EigensystemRecord* from = nullptr;
                for (const auto& r : d.records)
                    if (r.label == id.from) from = &r;
                if (!from) fail(Err::SchemaViolation, "identity references unknown record " + id.from);
                id.tau_image = element_from_json(from->coeff_field, ij["tau_image"]);
            }
            d.identities.push_back(std::move(id));
        }
    }
    return d;
}

json dataset_to_json(const Dataset& d) {
    json j;
    j["base_field"] = field_to_json(d.base_field);
    j["galois_generators"] = json::array();
    for (const auto& g : d.galois_generators) {
        json gj = automorphism_to_json(g);
        gj["name"] = g.name();
        j["galois_generators"].push_back(gj);
    }
    j["supported_primes"] = d.supported_primes;
    j["constituents"] = json::array();
    for (const auto& r : d.records) {
        json cj;
        cj["label"] = r.label;
        cj["dim"] = r.dim;
        cj["coeff_field"] = field_to_json(r.coeff_field);
        cj["aut_generators"] = json::array();
        for (const auto& a : r.aut_generators) {
            json aj = automorphism_to_json(a);
            aj["name"] = a.name();
            cj["aut_generators"].push_back(aj);
        }
        cj["atkin_lehner"] = r.atkin_lehner ? json(*r.atkin_lehner) : json(nullptr);
        json ev;
        for (const auto& [l, v] : r.eigenvalues) ev[l] = element_to_json(v);
        cj["eigenvalues"] = ev;
        j["constituents"].push_back(cj);
    }
    j["identities"] = json::array();
    for (const auto& id : d.identities) {
        json ij;
        ij["sigma_word"] = id.sigma_word;
        ij["from"] = id.from;
        ij["to"] = id.to;
        ij["tau_image"] = id.tau_image ? element_to_json(*id.tau_image) : json(nullptr);
        j["identities"].push_back(ij);
    }
    return j;
}

namespace {

/*
 * Builds an eigensystem on the supported primes obeying
 * a_{sigma^step(l)} = tau(a_l): free values are chosen on orbit
 * representatives and propagated; short orbits force values into the fixed
 * field of the matching power of tau, which the chooser must respect.
 */
EigensystemRecord synthesize_record(const std::string& label, const NumberField& L,
                                    const NFAutomorphism& tau, int step, const GaloisSetup& setup,
                                    const std::vector<NFElement>& free_values, int sign) {
    EigensystemRecord r;
    r.label = label;
    r.coeff_field = L;
    r.dim = L.degree();
    r.atkin_lehner = sign;
    r.aut_generators = {tau};

    int sigma = group_element_by_word(setup.group, "sigma");
    int step_elt = 0;
    for (int i = 0; i < step; ++i) step_elt = setup.group.mult(step_elt, sigma);

    std::vector<std::string> labels = setup.all_labels();
    std::set<std::string> seen;
    size_t next_value = 0;
    for (const std::string& l0 : labels) {
        if (seen.count(l0)) continue;
        std::vector<std::string> orbit{l0};
        std::string cur = setup.act(step_elt, l0);
        while (cur != l0) {
            orbit.push_back(cur);
            cur = setup.act(step_elt, cur);
        }
        if (next_value >= free_values.size())
            fail(Err::DomainError, "not enough free values supplied for " + label);
        NFElement a = free_values[next_value++];
        NFAutomorphism tau_m = tau.power(static_cast<int>(orbit.size()));
        if (!(tau_m.apply(a) == a))
            fail(Err::DomainError, "free value for orbit of " + l0 + " is not fixed by tau^" +
                                       std::to_string(orbit.size()));
        NFElement v = a;
        for (const std::string& l : orbit) {
            r.eigenvalues.emplace(l, v);
            seen.insert(l);
            v = tau.apply(v);
        }
    }
    r.find_generator_eigenvalue();
    return r;
}

NFElement subgroup_trace(const NumberField& L, const NFAutomorphism& tau, int power_step,
                         const NFElement& x) {
    // sum of tau^{power_step * j}(x) over the subgroup generated by tau^power_step
    NFElement t = L.zero();
    NFAutomorphism h = tau.power(power_step);
    NFElement cur = x;
    int m = tau.order() / std::gcd(tau.order(), power_step);
    if (power_step % tau.order() == 0) m = 1;
    for (int j = 0; j < m; ++j) {
        t = t + cur;
        cur = h.apply(cur);
    }
    return t;
}

}  // namespace

Dataset generate_example_dataset() {
    Dataset d;

    // base field F = Q(zeta_32)^+ with sigma the restriction of zeta -> zeta^21
    CyclotomicField C32(32);
    auto [F, eta32] = C32.real_subfield();
    (void)eta32;
    d.base_field = F;
    NFAutomorphism sigma = C32.restrict_to_real(21).named("sigma");
    d.galois_generators = {sigma};
    d.supported_primes = {2, 3, 5, 7, 31, 97};
    GaloisSetup setup = d.setup();

    // quartic coefficient fields with their order-4 twists
    NumberField Lf = NumberField::create(UniPoly({1, -4, -4, 1, 1}));
    NFAutomorphism tau_f = verify_automorphism(Lf, Lf.from_poly(UniPoly({-2, 3, 1, -1}))).named("tau_f");
    NumberField Lg = NumberField::create(UniPoly({1, 19, -59, 19, 1}));
    NFAutomorphism tau_g =
        verify_automorphism(Lg, Lg.element({Rat(24, 11), Rat(-48, 11), Rat(-24, 11), Rat(-1, 11)}))
            .named("tau_g");

    // degree-24 stand-in for the coefficient field of h: the degree-24
    // subfield of Q(zeta_73), cyclic over Q, with an order-8 automorphism
    // whose fixed field is the cubic subfield
    CyclotomicField C73(73);
    uint64_t g0 = least_primitive_root(73);
    NFAutomorphism order3 = C73.galois_map(powmod_u64(g0, 24, 73));
    AutGroup H3 = AutGroup::generate(C73.field(), {order3});
    auto [Lh, eta73] = fixed_field(C73.field(), H3);
    NFAutomorphism tau_h =
        restrict_automorphism(Lh, eta73, C73.galois_map(powmod_u64(g0, 3, 73))).named("tau_h");
    if (tau_h.order() != 8) fail(Err::DomainError, "stand-in twist should have order 8");

    const NFElement b = Lf.gen(), c = Lg.gen(), h = Lh.gen();

    // orbit representatives in label order: 2.1 | 3.1 | 31.1, 31.x | 5.1 | 7.1, 7.2 | 97.1, 97.x
    // (labels sort lexicographically: "2.1" < "3.1" < "31.1" ... < "5.1" < "7.1" < "97.1")
    EigensystemRecord f = synthesize_record(
        "f", Lf, tau_f, 2, setup,
        {Lf.from_rational(-1), Lf.from_rational(2), b, b * b - Lf.from_rational(2),
         Lf.from_rational(3), Lf.from_rational(1), Lf.from_rational(-2), b + Lf.one(),
         b * b + b - Lf.one()},
        -1);
    EigensystemRecord g = synthesize_record(
        "g", Lg, tau_g, 2, setup,
        {Lg.from_rational(-1), Lg.from_rational(-3), c, c * c - Lg.from_rational(3),
         Lg.from_rational(2), Lg.from_rational(4), Lg.from_rational(0), c - Lg.one(),
         c * c + Lg.one()},
        -1);
    // under step 1 the eight labels above 31 (and above 97) each form a
    // single orbit; sigma-fixed labels need tau_h-fixed values (cubic
    // subfield elements), the 7.x pair needs a tau_h^2-fixed value
    NFElement t1 = subgroup_trace(Lh, tau_h, 1, h);
    NFElement t2 = subgroup_trace(Lh, tau_h, 1, h * h);
    NFElement t3 = subgroup_trace(Lh, tau_h, 1, h * h * h);
    NFElement s1 = subgroup_trace(Lh, tau_h, 2, h);
    EigensystemRecord hr =
        synthesize_record("h", Lh, tau_h, 1, setup, {t1, t2, h, t3, s1, h * h}, +1);

    int sigma_idx = group_element_by_word(setup.group, "sigma");
    EigensystemRecord fp = inner_conjugate(f, sigma_idx, setup);
    fp.label = "f'";
    fp.find_generator_eigenvalue();
    EigensystemRecord gp = inner_conjugate(g, sigma_idx, setup);
    gp.label = "g'";
    gp.find_generator_eigenvalue();

    d.records = {f, fp, g, gp, hr};

    // the identities the eigenvalues were built to satisfy
    d.identities.push_back({"sigma", "f", "f'", std::nullopt});
    d.identities.push_back({"sigma^2", "f", "f", tau_f.generator_image()});
    d.identities.push_back({"sigma", "g", "g'", std::nullopt});
    d.identities.push_back({"sigma^2", "g", "g", tau_g.generator_image()});
    d.identities.push_back({"sigma", "h", "h", tau_h.generator_image()});

    // construction-time checks: the identities hold exactly and the paired
    // records are in distinct orbits
    int sigma2 = setup.group.mult(sigma_idx, sigma_idx);
    if (!records_equal(inner_conjugate(f, sigma_idx, setup), fp))
        fail(Err::DomainError, "dataset generator: sigma(f) != f'");
    if (!records_equal(inner_conjugate(f, sigma2, setup), exterior_twist(f, tau_f)))
        fail(Err::DomainError, "dataset generator: sigma^2(f) != tau_f twist");
    if (!records_equal(inner_conjugate(g, sigma2, setup), exterior_twist(g, tau_g)))
        fail(Err::DomainError, "dataset generator: sigma^2(g) != tau_g twist");
    if (!records_equal(inner_conjugate(hr, sigma_idx, setup), exterior_twist(hr, tau_h)))
        fail(Err::DomainError, "dataset generator: sigma(h) != tau_h twist");
    if (match_up_to_twist(f, fp) || match_up_to_twist(g, gp))
        fail(Err::DomainError, "dataset generator: paired records fell into one orbit");

    return d;
}

}  // namespace hol
