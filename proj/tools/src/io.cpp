#include "zetadiv_cli/io.hpp"

#include <fstream>

#include "zetadiv/errors.hpp"

namespace zetadiv::io {

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

gfp::Poly gfp_poly_from_json(const json& j, std::uint32_t p, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of integers");
    std::vector<long long> v;
    for (const auto& c : j) {
        if (!c.is_number_integer()) throw InvalidInput(std::string(what) + " must contain integers");
        v.push_back(c.get<long long>());
    }
    return gfp::from_integers(v, p);
}

json gfp_poly_to_json(const gfp::Poly& f) {
    json a = json::array();
    for (auto c : f) a.push_back(c);
    return a;
}

mpz_class big_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpz_class v;
        if (v.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput(std::string(what) + " is not a decimal integer");
        return v;
    }
    throw InvalidInput(std::string(what) + " must be an integer or a decimal string");
}

std::vector<std::string> coeff_strings(const json& j) {
    if (!j.is_array()) throw InvalidInput("\"coeffs\" must be an array");
    std::vector<std::string> out;
    for (const auto& c : j) out.push_back(big_from_json(c, "coefficient").get_str());
    return out;
}

std::uint32_t small_prime(const json& j) {
    if (!j.is_number_unsigned()) throw InvalidInput("\"p\" must be a positive integer");
    return j.get<std::uint32_t>();
}

}  // namespace

FiniteField field_from_json(const json& j) {
    const std::uint32_t p = small_prime(require(j, "p"));
    const auto& jm = require(j, "m");
    if (!jm.is_number_unsigned()) throw InvalidInput("\"m\" must be a positive integer");
    std::optional<gfp::Poly> modulus;
    if (j.contains("modulus") && !j.at("modulus").is_null()) {
        // Keep raw coefficients so out-of-range values are reported, not reduced.
        gfp::Poly raw;
        for (const auto& c : j.at("modulus")) {
            if (!c.is_number_unsigned()) throw InvalidInput("modulus coefficients must be nonnegative integers");
            raw.push_back(c.get<std::uint32_t>());
        }
        modulus = std::move(raw);
    }
    return make_field(p, jm.get<unsigned>(), modulus);
}

json to_json(const FiniteField& f) {
    return json{{"p", f.p()}, {"m", f.m()}, {"modulus", gfp_poly_to_json(f.modulus())}};
}

RationalMap rational_map_from_json(const json& j, std::uint32_t p) {
    gfp::Poly den{1};
    if (j.contains("den")) den = gfp_poly_from_json(j.at("den"), p, "\"den\"");
    return RationalMap(p, gfp_poly_from_json(require(j, "num"), p, "\"num\""), den);
}

json to_json(const RationalMap& f) {
    return json{{"num", gfp_poly_to_json(f.numerator())}, {"den", gfp_poly_to_json(f.denominator())}};
}

IntPolynomial poly_from_json(const json& j) { return IntPolynomial::from_strings(coeff_strings(require(j, "coeffs"))); }

json to_json(const IntPolynomial& f) { return json{{"coeffs", f.to_strings()}}; }

CurveModel curve_from_json(const json& j) {
    const auto& model = require(j, "model");
    if (!model.is_string()) throw InvalidInput("\"model\" must be a string");
    const std::string label = j.value("label", std::string{});
    auto c = [&] {
        if (model == "as2") {
            gfp::Poly den{1};
            if (j.contains("f_den")) den = gfp_poly_from_json(j.at("f_den"), 2, "\"f_den\"");
            return as2_curve(RationalMap(2, gfp_poly_from_json(require(j, "f_num"), 2, "\"f_num\""), den), label);
        }
        if (model == "hyper_odd") {
            const std::uint32_t p = small_prime(require(j, "p"));
            gfp::Poly h;
            if (j.contains("h")) h = gfp_poly_from_json(j.at("h"), p, "\"h\"");
            return hyper_odd_curve(p, h, gfp_poly_from_json(require(j, "f"), p, "\"f\""), label);
        }
        throw InvalidInput("unknown curve model \"" + model.get<std::string>() + "\"");
    }();
    c.note = j.value("note", std::string{});
    return c;
}

json to_json(const CurveModel& c) {
    json j;
    if (const auto* as2 = std::get_if<As2Model>(&c.model)) {
        j["model"] = "as2";
        j["f_num"] = gfp_poly_to_json(as2->f.numerator());
        j["f_den"] = gfp_poly_to_json(as2->f.denominator());
    } else {
        const auto& hy = std::get<HyperOddModel>(c.model);
        j["model"] = "hyper_odd";
        j["p"] = hy.p;
        j["h"] = gfp_poly_to_json(hy.h);
        j["f"] = gfp_poly_to_json(hy.f);
    }
    if (!c.label.empty()) j["label"] = c.label;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

LPolynomial lpoly_from_json(const json& j) {
    const mpz_class q = big_from_json(require(j, "q"), "\"q\"");
    const auto& jg = require(j, "g");
    if (!jg.is_number_unsigned()) throw InvalidInput("\"g\" must be a nonnegative integer");
    return {q, jg.get<unsigned>(), poly_from_json(j)};
}

json to_json(const LPolynomial& L) {
    json j;
    if (L.q.fits_slong_p()) {
        j["q"] = L.q.get_si();
    } else {
        j["q"] = L.q.get_str();
    }
    j["g"] = L.genus;
    j["coeffs"] = L.poly.to_strings();
    return j;
}

CurveOrLpoly curve_or_lpoly_from_json(const json& j) {
    if (j.is_object() && j.contains("model")) return curve_from_json(j);
    return lpoly_from_json(j);
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

}  // namespace zetadiv::io
