#include "pvi/io.hpp"

#include <cmath>
#include <sstream>

namespace pvi::io {

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const monodromy::MonodromyTriple& t) {
    return json::array({to_json(t.x0), to_json(t.x1), to_json(t.xinf)});
}

json to_json(const Mat2& m) {
    return json::array({to_json(m.a), to_json(m.b), to_json(m.c), to_json(m.d)});
}

json to_json(const connection::CriticalData& cd) {
    return json{{"sigma", to_json(cd.sigma)},
                {"a", to_json(cd.a)},
                {"point", point_name(cd.point)}};
}

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw validation_error("complex JSON must be [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

monodromy::MonodromyTriple triple_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw validation_error("triple JSON must be an array of three [re, im] pairs");
    return {complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2])};
}

namespace {

double parse_real_token(const std::string& s) {
    if (s.empty()) return 0.0;
    if (s == "sqrt2") return std::sqrt(2.0);
    if (s == "-sqrt2") return -std::sqrt(2.0);
    if (s == "+" ) return 1.0;
    if (s == "-") return -1.0;
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw validation_error("bad numeric token: " + s);
    return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw validation_error("empty complex literal");

    if (s.back() == 'i' || s.back() == 'I' || s.back() == 'j') {
        std::string body = s.substr(0, s.size() - 1);
        // Split into real part and imaginary coefficient at the last +-
        // that is not an exponent sign.
        std::size_t split = std::string::npos;
        for (std::size_t k = body.size(); k-- > 1;) {
            char c = body[k];
            if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        if (split == std::string::npos) return Complex(0.0, parse_real_token(body));
        return Complex(parse_real_token(body.substr(0, split)),
                       parse_real_token(body.substr(split)));
    }
    return Complex(parse_real_token(s), 0.0);
}

monodromy::MonodromyTriple parse_triple(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw validation_error("triple must have three comma-separated components");
    return {parse_complex(parts[0]), parse_complex(parts[1]), parse_complex(parts[2])};
}

std::string case_name(connection::CaseKind kind) {
    switch (kind) {
        case connection::CaseKind::GenericI: return "GenericI";
        case connection::CaseKind::ZeroII: return "ZeroII";
        case connection::CaseKind::III1: return "III1";
        case connection::CaseKind::III2: return "III2";
        case connection::CaseKind::III3: return "III3";
        case connection::CaseKind::III4: return "III4";
    }
    return "?";
}

std::string point_name(connection::CriticalPoint p) {
    switch (p) {
        case connection::CriticalPoint::zero: return "zero";
        case connection::CriticalPoint::one: return "one";
        case connection::CriticalPoint::infinity: return "infinity";
    }
    return "?";
}

std::string provenance_header(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::ostringstream os;
    os << "# artifact: pvi-critical-behavior 1.0\n";
    for (const auto& [k, v] : kv) os << "# " << k << ": " << v << "\n";
    return os.str();
}

}  // namespace pvi::io
