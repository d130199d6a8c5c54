#include "rtorsion/json_io.hpp"

#include <regex>

#include "rtorsion/errors.hpp"

namespace rtorsion {

Json to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({Json(e), c.get_str()}));
    return Json{{"vars", p.vars()}, {"terms", terms}};
}

Json to_json(const UniPoly& p) { return to_json(p.to_multi().with_vars({p.var()})); }

MultiPoly multipoly_from_json(const Json& j) {
    static const std::regex integer(R"(-?\d+)");
    try {
        if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
            throw ParseError("polynomial JSON needs \"vars\" and \"terms\"");
        auto vars = j.at("vars").get<std::vector<std::string>>();
        MultiPoly out = MultiPoly(0).with_vars(vars);
        for (const auto& t : j.at("terms")) {
            if (!t.is_array() || t.size() != 2) throw ParseError("polynomial JSON term must be [exponents, coeff]");
            auto e = t[0].get<std::vector<int>>();
            if (e.size() != vars.size()) throw ParseError("polynomial JSON term has the wrong number of exponents");
            std::string c = t[1].is_string() ? t[1].get<std::string>() : t[1].dump();
            if (!std::regex_match(c, integer)) throw ParseError("polynomial JSON coefficient is not an integer: " + c);
            out += MultiPoly::monomial(vars, e, Integer(c));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("polynomial JSON: ") + e.what());
    }
}

std::string real_to_string(const Real& x, int digits) {
    if (x == 0) return "0";
    std::string s = x.str(digits);
    if (s.find_first_not_of("-0.e+") == std::string::npos) return "0";
    return s;
}

Json to_json(const Complex& z, int digits) {
    return Json{{"re", real_to_string(z.re, digits)}, {"im", real_to_string(z.im, digits)}};
}

Json poly_entry(const MultiPoly& p) { return Json{{"text", p.to_string()}, {"json", to_json(p)}}; }

Json poly_entry(const UniPoly& p) { return Json{{"text", p.to_string()}, {"json", to_json(p)}}; }

}  // namespace rtorsion
