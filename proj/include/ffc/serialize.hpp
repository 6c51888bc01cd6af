#ifndef FFC_SERIALIZE_HPP
#define FFC_SERIALIZE_HPP

#include <json.hpp>

#include "ffc/abstract_model.hpp"
#include "ffc/theorem.hpp"

namespace ffc {

using nlohmann::json;

inline const char* library_version() { return "ffc 0.1.0"; }

// ---------------------------------------------------------------------------
// Fields, elements, polynomials: exact coefficient lists, little-endian,
// coefficients as integers in [0, p). Elements of prime fields serialize as
// plain integers; extension elements as arrays over F_p.
// ---------------------------------------------------------------------------

inline json field_to_json(const FieldPtr& F) {
    json j{{"p", F->p}, {"k", F->k}};
    if (F->k > 1) j["modulus"] = F->modulus;
    return j;
}

inline FieldPtr field_from_json(const json& j) {
    u32 p = j.at("p").get<u32>();
    u32 k = j.at("k").get<u32>();
    if (k == 1) return std::make_shared<FieldDesc>(p, 1, std::vector<u32>{});
    return std::make_shared<FieldDesc>(p, k, j.at("modulus").get<std::vector<u32>>());
}

inline json fe_to_json(const Fe& a) {
    if (a.field()->k == 1) return a.rep().empty() ? 0 : a.rep()[0];
    json arr = json::array();
    for (u32 i = 0; i < a.field()->k; ++i)
        arr.push_back(i < a.rep().size() ? a.rep()[i] : 0);
    return arr;
}

inline Fe fe_from_json(const FieldPtr& F, const json& j) {
    if (j.is_number_integer()) return Fe::from_int(F, j.get<long long>());
    auto v = j.get<std::vector<u32>>();
    for (u32 c : v)
        if (c >= F->p) throw error(errc::bad_descriptor, "coefficient out of range");
    if (v.size() > F->k) throw error(errc::bad_descriptor, "element longer than field degree");
    return Fe(F, std::move(v));
}

inline json poly_to_json(const Poly& f) {
    json arr = json::array();
    for (auto& c : f.coeffs()) arr.push_back(fe_to_json(c));
    return arr;
}

inline Poly poly_from_json(const FieldPtr& F, const json& j) {
    std::vector<Fe> cs;
    for (auto& c : j) cs.push_back(fe_from_json(F, c));
    return Poly(F, std::move(cs));
}

inline json ratfunc_to_json(const RationalFunction& g) {
    return json{{"num", poly_to_json(g.num())}, {"den", poly_to_json(g.den())}};
}

inline RationalFunction ratfunc_from_json(const FieldPtr& F, const json& j) {
    Poly num = poly_from_json(F, j.at("num"));
    Poly den = j.contains("den") ? poly_from_json(F, j.at("den")) : Poly::one(F);
    return RationalFunction(num, den);
}

inline json place_to_json(const Place& P) {
    if (P.is_infinity()) return json{{"type", "infinity"}};
    return json{{"type", "finite"}, {"pi", poly_to_json(P.pi())}};
}

inline Place place_from_json(const FieldPtr& F, const json& j) {
    std::string t = j.at("type").get<std::string>();
    if (t == "infinity") return Place::infinity(F);
    if (t == "finite") return Place::finite(poly_from_json(F, j.at("pi")));
    throw error(errc::bad_descriptor, "unknown place type " + t);
}

// ---------------------------------------------------------------------------
// Covers.
// ---------------------------------------------------------------------------

inline json component_to_json(const ComponentSpec& c) {
    switch (c.kind) {
        case CoverKind::kummer:
            return json{{"kind", "kummer"}, {"n", c.n}, {"f", ratfunc_to_json(c.f)}};
        case CoverKind::artin_schreier:
            return json{{"kind", "artin_schreier"}, {"f", ratfunc_to_json(c.f)}};
        case CoverKind::constant:
            return json{{"kind", "constant"}, {"m", c.n}};
    }
    throw error(errc::internal, "bad component kind");
}

inline ComponentSpec component_from_json(const FieldPtr& F, const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "kummer")
        return ComponentSpec::kummer(j.at("n").get<u64>(), ratfunc_from_json(F, j.at("f")));
    if (kind == "artin_schreier" || kind == "as")
        return ComponentSpec::artin_schreier(ratfunc_from_json(F, j.at("f")));
    if (kind == "constant" || kind == "const")
        return ComponentSpec::constant(F, j.at("m").get<u64>());
    if (kind == "composite")
        throw error(errc::bad_descriptor, "composite components cannot nest");
    throw error(errc::bad_descriptor, "unknown cover kind " + kind);
}

inline json cover_to_json(const Cover& c) {
    json comps = json::array();
    for (auto& comp : c.comps) comps.push_back(component_to_json(comp));
    json j{{"base", field_to_json(c.F)}, {"h", c.h}, {"group_orders", c.G.orders()}};
    if (c.comps.size() == 1) j["cover"] = comps[0];
    else j["cover"] = json{{"kind", "composite"}, {"components", comps}};
    return j;
}

inline std::vector<ComponentSpec> components_from_json(const FieldPtr& F, const json& j) {
    if (j.at("kind").get<std::string>() == "composite") {
        std::vector<ComponentSpec> out;
        for (auto& c : j.at("components")) out.push_back(component_from_json(F, c));
        return out;
    }
    return {component_from_json(F, j)};
}

// ---------------------------------------------------------------------------
// Frobenius data and reports. Group elements are named by their generator
// exponent vectors.
// ---------------------------------------------------------------------------

inline json element_to_json(const Cover& cov, u64 g) { return json(cov.G.decode(g)); }

inline json element_set_to_json(const Cover& cov, const std::vector<u64>& S) {
    json arr = json::array();
    for (u64 g : S) arr.push_back(element_to_json(cov, g));
    return arr;
}

inline json frobenius_data_to_json(const Cover& cov, const FrobeniusData& d) {
    return json{{"place", place_to_json(d.P)},
                {"deg_P", d.P.degree()},
                {"e", d.e},
                {"f", d.f},
                {"num_places_above", d.num_places_above},
                {"deg_Q", d.deg_Q},
                {"I", element_set_to_json(cov, d.I)},
                {"D", element_set_to_json(cov, d.D)},
                {"frobenius_coset", element_set_to_json(cov, d.coset)}};
}

inline json rational_to_json(const Rational& r) {
    return json{{"num", r.num()}, {"den", r.den()}};
}

inline json report_to_json(const TheoremReport& rep) {
    json rows = json::array();
    for (auto& r : rep.rows)
        rows.push_back(json{{"place", place_to_json(r.P)},
                            {"e", r.e},
                            {"f", r.f},
                            {"deg_Q", r.deg_Q},
                            {"measure", rational_to_json(r.mu)},
                            {"predicted_fiber", r.predicted},
                            {"counted_fiber", r.counted},
                            {"pass", r.pass}});
    json j{{"gamma", rep.gamma_exponents},
           {"m", rep.m},
           {"h", rep.h},
           {"group_size", rep.group_size},
           {"n_size", rep.n_size},
           {"used_oracle", rep.used_oracle},
           {"rows", rows},
           {"sum_fibers", rep.sum_fibers},
           {"twist_rational_places", rep.twist_count},
           {"sum_measures", rational_to_json(rep.S)},
           {"target", rational_to_json(rep.target)},
           {"all_pass", rep.all_pass}};
    if (rep.genus_supported) {
        j["genus"] = rep.genus_value;
        j["bound"] = json{{"checked", rep.bound_checked},
                          {"equality", rep.bound_equality},
                          {"rhs_sq", rational_to_json(rep.bound_rhs_sq)}};
    } else {
        j["bound"] = "skipped";
    }
    if (rep.tail_degree > 1) {
        j["tail"] = rational_to_json(rep.tail);
        j["tail_degree"] = rep.tail_degree;
    }
    return j;
}

inline std::string report_csv_header() {
    return "gamma,place,e,f,deg_Q,measure_num,measure_den,predicted_fiber,counted_fiber,pass";
}

inline void report_to_csv(const TheoremReport& rep, std::string& out) {
    std::string gam;
    for (size_t i = 0; i < rep.gamma_exponents.size(); ++i)
        gam += (i ? "." : "") + std::to_string(rep.gamma_exponents[i]);
    for (auto& r : rep.rows) {
        out += gam + "," + r.P.str() + "," + std::to_string(r.e) + "," + std::to_string(r.f) +
               "," + std::to_string(r.deg_Q) + "," + std::to_string(r.mu.num()) + "," +
               std::to_string(r.mu.den()) + "," + std::to_string(r.predicted) + "," +
               std::to_string(r.counted) + "," + (r.pass ? "1" : "0") + "\n";
    }
}

// ---------------------------------------------------------------------------
// Abstract models: group as multiplication table, subgroups as element lists,
// so failing cases can be replayed exactly.
// ---------------------------------------------------------------------------

inline json abstract_model_to_json(const AbstractModel& m) {
    return json{{"group", json{{"name", m.G.name()}, {"table", m.G.table()}}},
                {"N", m.N},
                {"fbar", m.fbar},
                {"D", m.D},
                {"I", m.I},
                {"gamma0", m.gamma0},
                {"deg_P", m.degP}};
}

inline AbstractModel abstract_model_from_json(const json& j) {
    Group G(j.at("group").at("name").get<std::string>(),
            j.at("group").at("table").get<std::vector<std::vector<u32>>>());
    G.check_associative();
    AbstractModel m{std::move(G),
                    j.at("N").get<std::vector<u32>>(),
                    j.at("fbar").get<u32>(),
                    j.at("D").get<std::vector<u32>>(),
                    j.at("I").get<std::vector<u32>>(),
                    j.at("gamma0").get<u32>(),
                    j.at("deg_P").get<u32>()};
    m.validate();
    return m;
}

} // namespace ffc

#endif
