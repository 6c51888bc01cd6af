#ifndef FFC_DESCRIPTOR_HPP
#define FFC_DESCRIPTOR_HPP

#include "ffc/serialize.hpp"

namespace ffc {

// Inline cover grammar (see docs/cover-grammar.ebnf):
//   cover    = simple | "compose:[" cover { "," cover } "]"
//   simple   = "kummer:" int ":" expr | "as:" expr | "const:" int
//   expr     = term { ("+"|"-") term }
//   term     = factor { ("*"|"/") factor | factor }   (juxtaposition = *)
//   factor   = atom [ "^" int ]
//   atom     = int | "x" | "(" expr ")"
// Integer literals land in the prime subfield. JSON cover documents accept
// arbitrary field coefficients and are the canonical interchange form.

namespace detail {

class ExprParser {
  public:
    ExprParser(const FieldPtr& F, std::string text) : F_(F), s_(std::move(text)) {}

    RationalFunction parse() {
        RationalFunction r = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw error(errc::bad_descriptor, "trailing input in expression: " + s_.substr(pos_));
        return r;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && isspace((unsigned char)s_[pos_])) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RationalFunction expr() {
        RationalFunction r = term();
        for (;;) {
            if (eat('+')) r = r + term();
            else if (eat('-')) r = r - term();
            else return r;
        }
    }
    RationalFunction term() {
        RationalFunction r = factor();
        for (;;) {
            if (eat('*')) r = r * factor();
            else if (eat('/')) r = r / factor();
            else if (peek() == 'x' || peek() == '(') r = r * factor(); // juxtaposition
            else return r;
        }
    }
    RationalFunction factor() {
        RationalFunction a = atom();
        if (eat('^')) {
            long long e = integer();
            return a.pow(e);
        }
        return a;
    }
    RationalFunction atom() {
        skip_ws();
        if (peek() == '(') {
            eat('(');
            RationalFunction r = expr();
            if (!eat(')')) throw error(errc::bad_descriptor, "missing )");
            return r;
        }
        if (peek() == 'x') {
            ++pos_;
            return RationalFunction::x(F_);
        }
        if (isdigit((unsigned char)peek()))
            return RationalFunction(Poly::constant(Fe::from_int(F_, integer())));
        throw error(errc::bad_descriptor, "expected a term at: " + s_.substr(pos_));
    }
    long long integer() {
        skip_ws();
        bool neg = eat('-');
        if (!isdigit((unsigned char)peek())) throw error(errc::bad_descriptor, "expected integer");
        long long v = 0;
        while (pos_ < s_.size() && isdigit((unsigned char)s_[pos_])) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    FieldPtr F_;
    std::string s_;
    size_t pos_ = 0;
};

// split "a,b,c" at top level (commas inside [...] or (...) do not count)
inline std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else cur += c;
    }
    parts.push_back(cur);
    return parts;
}

} // namespace detail

inline RationalFunction parse_function(const FieldPtr& F, const std::string& text) {
    return detail::ExprParser(F, text).parse();
}

/// Parses a cover descriptor: either the compact inline grammar or a JSON
/// document (recognized by a leading '{').
inline std::vector<ComponentSpec> parse_cover(const FieldPtr& F, const std::string& text0) {
    std::string text = text0;
    while (!text.empty() && isspace((unsigned char)text.front())) text.erase(text.begin());
    if (text.empty()) throw error(errc::bad_descriptor, "empty cover descriptor");
    if (text.front() == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) throw error(errc::bad_descriptor, "bad JSON cover");
        return components_from_json(F, j);
    }
    if (text.rfind("compose:[", 0) == 0) {
        if (text.back() != ']') throw error(errc::bad_descriptor, "compose needs a closing ]");
        std::string inner = text.substr(9, text.size() - 10);
        std::vector<ComponentSpec> out;
        for (auto& part : detail::split_top_level(inner)) {
            auto sub = parse_cover(F, part);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        if (out.empty()) throw error(errc::bad_descriptor, "empty composite");
        return out;
    }
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw error(errc::bad_descriptor, "cover descriptor needs kind:...");
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    if (kind == "kummer") {
        auto colon2 = rest.find(':');
        if (colon2 == std::string::npos)
            throw error(errc::bad_descriptor, "kummer needs kummer:n:f");
        u64 n = std::stoull(rest.substr(0, colon2));
        return {ComponentSpec::kummer(n, parse_function(F, rest.substr(colon2 + 1)))};
    }
    if (kind == "as") return {ComponentSpec::artin_schreier(parse_function(F, rest))};
    if (kind == "const") return {ComponentSpec::constant(F, std::stoull(rest))};
    throw error(errc::bad_descriptor, "unknown cover kind " + kind);
}

/// Resolves a gamma selector: "all" gives the whole coset Fbar N; otherwise a
/// comma-separated exponent vector names one element, which must lie in the
/// coset.
inline std::vector<u64> parse_gamma(const Cover& cov, const std::string& text) {
    if (text == "all") return cov.FbarN;
    std::vector<u32> exps;
    for (auto& part : detail::split_top_level(text)) exps.push_back(u32(std::stoul(part)));
    if (exps.size() != cov.G.rank())
        throw error(errc::bad_descriptor, "gamma needs one exponent per cover component");
    u64 g = cov.G.encode(exps);
    if (!cov.in_FbarN(g))
        throw error(errc::gamma_not_in_coset, "gamma is not in the coset Fbar N");
    return {g};
}

} // namespace ffc

#endif
