#include "hol/jsonio.hpp"

#include <fstream>
#include <sstream>

#include "hol/errors.hpp"

namespace hol {

// integers beyond 2^53 are emitted as decimal strings so nothing is ever
// routed through a double
static json int_to_json(const Int& v) {
    static const Int lim("9007199254740992");
    if (abs(v) < lim) return json(static_cast<long long>(v.get_si()));
    return json(v.get_str());
}

json poly_to_json(const UniPoly& f) {
    json a = json::array();
    for (int i = 0; i <= f.degree(); ++i) {
        Rat c = f.coeff(i);
        if (rat_is_integer(c)) {
            a.push_back(int_to_json(rat_to_integer(c)));
        } else {
            a.push_back(json::array({int_to_json(Int(c.get_num())), int_to_json(Int(c.get_den()))}));
        }
    }
    return a;
}

static std::string int_text(const json& j) {
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_string()) return j.get<std::string>();
    fail(Err::SchemaViolation, "expected an integer or decimal string, got " + j.dump());
}

static Rat rat_from_json_scalar(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_array() && j.size() == 2) return rat_from_string(int_text(j[0]) + "/" + int_text(j[1]));
    // large integers must arrive as strings or [num, den] pairs; json floats
    // would lose precision and are rejected
    fail(Err::SchemaViolation, "cannot read rational from " + j.dump());
}

UniPoly poly_from_json(const json& j) {
    if (!j.is_array()) fail(Err::SchemaViolation, "polynomial must be a JSON array");
    std::vector<Rat> c;
    for (const auto& e : j) c.push_back(rat_from_json_scalar(e));
    return UniPoly(std::move(c));
}

UniPoly poly_from_cli(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body[0] == '@') {
        std::ifstream in(body.substr(1));
        if (!in) fail(Err::SchemaViolation, "cannot open polynomial file " + body.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        body = ss.str();
    }
    // strip whitespace
    std::string t;
    for (char ch : body)
        if (!isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) fail(Err::SchemaViolation, "empty polynomial");
    if (t[0] == '[' || t[0] == '{') {
        json j = json::parse(t, nullptr, false);
        if (j.is_discarded()) fail(Err::SchemaViolation, "malformed polynomial JSON");
        if (j.is_object() && j.contains("coeffs")) return poly_from_json(j["coeffs"]);
        return poly_from_json(j);
    }
    // CSV of rationals
    std::vector<Rat> c;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(rat_from_string(item));
    return UniPoly(std::move(c));
}

json field_to_json(const NumberField& K) { return json{{"poly", poly_to_json(K.poly())}}; }

NumberField field_from_json(const json& j, int prime_budget) {
    if (!j.is_object() || !j.contains("poly"))
        fail(Err::SchemaViolation, "number field must be {\"poly\": [...]}");
    return NumberField::create(poly_from_json(j["poly"]), prime_budget);
}

json element_to_json(const NFElement& x) {
    json coords = json::array();
    for (const Rat& c : x.coords()) coords.push_back(rat_to_string(c));
    return json{{"coords", coords}};
}

NFElement element_from_json(const NumberField& K, const json& j) {
    if (!j.is_object() || !j.contains("coords"))
        fail(Err::SchemaViolation, "element must be {\"coords\": [...]}");
    std::vector<Rat> coords;
    for (const auto& e : j["coords"]) coords.push_back(rat_from_json_scalar(e));
    if (static_cast<int>(coords.size()) != K.degree())
        fail(Err::SchemaViolation, "element has " + std::to_string(coords.size()) +
                                       " coordinates in a degree-" + std::to_string(K.degree()) + " field");
    return K.element(std::move(coords));
}

json automorphism_to_json(const NFAutomorphism& a) {
    return json{{"image", element_to_json(a.generator_image())}};
}

NFAutomorphism automorphism_from_json(const NumberField& K, const json& j) {
    if (!j.is_object() || !j.contains("image"))
        fail(Err::SchemaViolation, "automorphism must be {\"image\": {...}}");
    return verify_automorphism(K, element_from_json(K, j["image"]));
}

json prime_ideal_to_json(const PrimeIdeal& P) {
    json g = json::array();
    for (int i = 0; i <= P.g.degree(); ++i) g.push_back(P.g.coeff(i));
    return json{{"p", P.p}, {"g", g}, {"e", P.e}, {"f", P.f}, {"label", P.label}};
}

}  // namespace hol
