#include "ermc/io.hpp"

#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ermc {

namespace {

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == delim) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

long long parse_ll(const std::string& s) {
    std::size_t pos = 0;
    long long v;
    try {
        v = std::stoll(s, &pos);
    } catch (...) {
        throw DomainError("parse: expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw DomainError("parse: trailing characters in '" + s + "'");
    return v;
}

std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    for (const auto& part : split(s, ',')) out.push_back(parse_ll(part));
    return out;
}

Fq reduce_index(const BaseField& f, long long v) {
    const long long q = f.q();
    return f.from_index(static_cast<uint64_t>(((v % q) + q) % q));
}

} // namespace

BaseField parse_field(const std::string& spec) {
    const auto caret = spec.find('^');
    if (caret == std::string::npos) {
        const long long p = parse_ll(spec);
        if (p < 2) throw DomainError("field spec: p must be at least 2");
        return BaseField(static_cast<uint32_t>(p));
    }
    const auto colon = spec.find(':', caret);
    if (colon == std::string::npos)
        throw DomainError("field spec: p^m requires a modulus, use p^m:c0,...,cm");
    const long long p = parse_ll(spec.substr(0, caret));
    const long long m = parse_ll(spec.substr(caret + 1, colon - caret - 1));
    if (p < 2 || m < 1) throw DomainError("field spec: bad p or m");
    std::vector<uint32_t> mod;
    for (long long c : parse_int_list(spec.substr(colon + 1)))
        mod.push_back(static_cast<uint32_t>(((c % p) + p) % p));
    return BaseField(static_cast<uint32_t>(p), static_cast<uint32_t>(m), std::move(mod));
}

ExtField parse_ext(const BaseField& base, const std::string& spec) {
    const auto parts = split(spec, ':');
    const long long n = parse_ll(parts[0]);
    if (n < 1) throw DomainError("extension spec: n must be at least 1");
    if (parts.size() == 1) {
        return ExtField(base, static_cast<uint32_t>(n),
                        find_irreducible(base, static_cast<uint32_t>(n)));
    }
    std::vector<Fq> mod;
    for (long long c : parse_int_list(parts[1])) mod.push_back(reduce_index(base, c));
    uint32_t s = 1;
    if (parts.size() >= 3) s = static_cast<uint32_t>(parse_ll(parts[2]));
    if (parts.size() > 3) throw DomainError("extension spec: too many ':' sections");
    return ExtField(base, static_cast<uint32_t>(n), std::move(mod), s);
}

LBasis parse_basis(const ExtField& ext, const std::string& spec) {
    if (spec.empty() || spec == "power") return power_basis(ext);
    std::vector<LElem> elems;
    for (const auto& part : split(spec, ';')) {
        const auto coords = parse_int_list(part);
        if (coords.size() != ext.n())
            throw DomainError("basis spec: each element needs n coordinates");
        LElem e(ext.n());
        for (std::size_t i = 0; i < coords.size(); ++i) e[i] = reduce_index(ext.base(), coords[i]);
        elems.push_back(std::move(e));
    }
    return LBasis(ext, std::move(elems));
}

FPoly parse_poly(const BaseField& f, uint32_t n, uint32_t d, const std::string& text) {
    FPoly out = zero_poly<Fq>(n, d);
    std::string stripped;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) stripped.push_back(c);
    if (stripped.empty() || stripped == "0") return out;

    for (const auto& term : split(stripped, '+')) {
        if (term.empty()) throw DomainError("poly parse: empty term");
        Exponents e(n, 0);
        Fq coeff = f.one();
        bool saw_coeff = false;
        for (const auto& factor : split(term, '*')) {
            if (factor.empty()) throw DomainError("poly parse: empty factor in '" + term + "'");
            if (factor[0] == 'x') {
                const auto caret = factor.find('^');
                const std::string idx_s =
                    caret == std::string::npos ? factor.substr(1) : factor.substr(1, caret - 1);
                const long long idx = parse_ll(idx_s);
                if (idx < 1 || idx > n) throw DomainError("poly parse: variable index out of range");
                const long long exp = caret == std::string::npos
                                          ? 1
                                          : parse_ll(factor.substr(caret + 1));
                if (exp < 0 || exp > 255) throw DomainError("poly parse: bad exponent");
                e[idx - 1] = static_cast<uint8_t>(e[idx - 1] + exp);
            } else {
                if (saw_coeff) throw DomainError("poly parse: two coefficients in one term");
                saw_coeff = true;
                if (factor.front() == '[') {
                    // coordinate-list coefficient [c0,c1,...] over the prime field
                    if (factor.back() != ']') throw DomainError("poly parse: unclosed '['");
                    const auto coords = parse_int_list(factor.substr(1, factor.size() - 2));
                    if (coords.size() != f.m())
                        throw DomainError("poly parse: coefficient needs m coordinates");
                    uint64_t index = 0, mult = 1;
                    for (long long c : coords) {
                        index += static_cast<uint64_t>(((c % f.p()) + f.p()) % f.p()) * mult;
                        mult *= f.p();
                    }
                    coeff = f.from_index(index);
                } else {
                    coeff = f.from_int(parse_ll(factor));
                }
            }
        }
        uint32_t total = 0;
        for (auto x : e) total += x;
        if (total != d)
            throw DomainError("poly parse: term degree " + std::to_string(total) +
                              " does not match d = " + std::to_string(d));
        detail::add_term(f, out.terms, e, coeff);
    }
    return out;
}

std::string poly_to_string(const FPoly& poly) {
    if (poly.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : poly.terms) {
        if (!first) os << "+";
        first = false;
        os << c.v;
        for (uint32_t i = 0; i < poly.n; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
        }
    }
    return os.str();
}

nlohmann::json poly_to_json(const FPoly& poly) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : poly.terms) {
        nlohmann::json t;
        t["exp"] = std::vector<int>(e.begin(), e.end());
        t["coeff"] = c.v;
        terms.push_back(std::move(t));
    }
    return nlohmann::json{{"n", poly.n}, {"d", poly.d}, {"terms", std::move(terms)}};
}

FPoly poly_from_json(const BaseField& f, const nlohmann::json& j) {
    FPoly out = zero_poly<Fq>(j.at("n").get<uint32_t>(), j.at("d").get<uint32_t>());
    for (const auto& t : j.at("terms")) {
        const auto exps = t.at("exp").get<std::vector<long long>>();
        if (exps.size() != out.n) throw DomainError("poly json: exponent length mismatch");
        Exponents e;
        uint32_t total = 0;
        for (auto x : exps) {
            if (x < 0 || x > 255) throw DomainError("poly json: bad exponent");
            e.push_back(static_cast<uint8_t>(x));
            total += static_cast<uint32_t>(x);
        }
        if (total != out.d) throw DomainError("poly json: term degree mismatch");
        detail::add_term(f, out.terms, e, f.from_int(t.at("coeff").get<long long>()));
    }
    return out;
}

nlohmann::json matrix_to_json(const Mat<Fq>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).v);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string matrix_to_csv(const Mat<Fq>& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ",";
            os << m.at(i, j).v;
        }
        os << "\n";
    }
    return os.str();
}

std::vector<Fq> parse_message(const BaseField& f, const std::string& text) {
    std::vector<Fq> out;
    for (long long c : parse_int_list(text)) out.push_back(f.from_int(c));
    return out;
}

} // namespace ermc
