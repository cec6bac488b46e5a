#ifndef ANNSEQ_IO_HPP
#define ANNSEQ_IO_HPP

#include <fstream>
#include <nlohmann/json.hpp>

#include "annseq/result.hpp"
#include "annseq/sequence.hpp"

namespace annseq {

// Input/schema problem; `where` is a JSON-pointer-ish path to the offender.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

namespace io_detail {

using nlohmann::json;

inline Field parse_field_name(const std::string& name, const std::string& where) {
    if (name == "rational") return Field::rationals();
    if (name.rfind("fp:", 0) == 0) {
        try {
            return Field::fp(std::stoull(name.substr(3)));
        } catch (const std::exception& e) {
            throw InputError(where, std::string("bad field tag: ") + e.what());
        }
    }
    throw InputError(where, "field must be \"rational\" or \"fp:<prime>\"");
}

inline Exponent parse_exponent(const json& j, std::size_t n, const std::string& where) {
    if (!j.is_array()) throw InputError(where, "exponent must be an integer array");
    if (j.size() != n)
        throw InputError(where, "exponent has " + std::to_string(j.size()) +
                                    " entries, expected " + std::to_string(n));
    Exponent e;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_unsigned())
            throw InputError(where + "/" + std::to_string(i),
                             "exponent entry must be a non-negative integer");
        e.push_back(j[i].get<std::uint32_t>());
    }
    return e;
}

}  // namespace io_detail

struct SequenceDocument {
    std::vector<std::string> vars;
    SequenceFamily family;
};

inline SequenceDocument load_document(const nlohmann::json& doc) {
    using io_detail::parse_exponent;
    if (!doc.is_object()) throw InputError("/", "document must be an object");
    if (!doc.contains("vars") || !doc["vars"].is_array() || doc["vars"].empty())
        throw InputError("/vars", "need a nonempty array of variable names");
    if (!doc.contains("field") || !doc["field"].is_string())
        throw InputError("/field", "need a field tag string");
    if (!doc.contains("sequences") || !doc["sequences"].is_array() ||
        doc["sequences"].empty())
        throw InputError("/sequences", "need a nonempty array of sequences");

    SequenceDocument out;
    for (const auto& v : doc["vars"]) {
        if (!v.is_string()) throw InputError("/vars", "variable names must be strings");
        out.vars.push_back(v.get<std::string>());
    }
    std::size_t n = out.vars.size();
    Field field = io_detail::parse_field_name(doc["field"].get<std::string>(), "/field");

    std::vector<NSequence> members;
    for (std::size_t si = 0; si < doc["sequences"].size(); ++si) {
        const auto& js = doc["sequences"][si];
        std::string base = "/sequences/" + std::to_string(si);
        if (!js.is_object()) throw InputError(base, "sequence must be an object");
        if (!js.contains("support") || !js["support"].is_array())
            throw InputError(base + "/support", "need an array of exponents");
        if (!js.contains("values") || !js["values"].is_array())
            throw InputError(base + "/values", "need an array of [exponent, scalar] pairs");

        NSequence seq;
        seq.n = n;
        seq.field = field;
        for (std::size_t i = 0; i < js["support"].size(); ++i)
            seq.support.insert(
                parse_exponent(js["support"][i], n, base + "/support/" + std::to_string(i)));
        for (std::size_t i = 0; i < js["values"].size(); ++i) {
            std::string where = base + "/values/" + std::to_string(i);
            const auto& pair = js["values"][i];
            if (!pair.is_array() || pair.size() != 2 || !pair[1].is_string())
                throw InputError(where, "value entry must be [exponent, scalar string]");
            Exponent e = parse_exponent(pair[0], n, where + "/0");
            Scalar v;
            try {
                v = field.parse(pair[1].get<std::string>());
            } catch (const std::exception& ex) {
                throw InputError(where + "/1", ex.what());
            }
            if (!seq.values.emplace(e, v).second)
                throw InputError(where, "duplicate value exponent");
        }
        if (auto bad = validate(seq))
            throw InputError(base, bad->message + " at " + mono_str(bad->where, out.vars));
        members.push_back(std::move(seq));
    }
    try {
        out.family = make_family(std::move(members));
    } catch (const std::exception& e) {
        throw InputError("/sequences", e.what());
    }
    return out;
}

inline nlohmann::json save_document(const SequenceDocument& doc) {
    nlohmann::json j;
    j["vars"] = doc.vars;
    j["field"] = doc.family.field().name();
    j["sequences"] = nlohmann::json::array();
    for (const auto& seq : doc.family.members) {
        nlohmann::json js;
        js["support"] = nlohmann::json::array();
        for (const auto& e : seq.support) js["support"].push_back(e);
        js["values"] = nlohmann::json::array();
        for (const auto& [e, v] : seq.values)
            js["values"].push_back(nlohmann::json::array({e, v.str()}));
        j["sequences"].push_back(std::move(js));
    }
    return j;
}

inline nlohmann::json save_result(const AnnihilatorResult& res,
                                  const std::vector<std::string>& vars) {
    nlohmann::json j;
    j["engine"] = res.engine;
    j["unit_ideal"] = res.unit_ideal;
    j["r"] = res.r;
    j["vs_basis"] = nlohmann::json::array();
    for (const auto& p : res.vs_basis) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [e, c] : p.terms())
            terms.push_back(nlohmann::json::array({e, c.str()}));
        j["vs_basis"].push_back({{"display", p.str(vars)}, {"terms", std::move(terms)}});
    }
    j["border"] = nlohmann::json::array();
    for (const auto& b : res.border_gens)
        j["border"].push_back({{"display", mono_str(b, vars)}, {"exponent", b}});
    return j;
}

// Generator list for the verify subcommand: {vars, field, generators:
// [[[exp, "scalar"], ...], ...]}.
inline std::vector<Polynomial> load_generators(const nlohmann::json& doc,
                                               std::size_t n, const Field& field) {
    if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array())
        throw InputError("/generators", "need an array of polynomials");
    std::vector<Polynomial> out;
    for (std::size_t gi = 0; gi < doc["generators"].size(); ++gi) {
        std::string base = "/generators/" + std::to_string(gi);
        const auto& jp = doc["generators"][gi];
        if (!jp.is_array()) throw InputError(base, "polynomial must be an array of terms");
        Polynomial p(n);
        for (std::size_t ti = 0; ti < jp.size(); ++ti) {
            std::string where = base + "/" + std::to_string(ti);
            const auto& term = jp[ti];
            if (!term.is_array() || term.size() != 2 || !term[1].is_string())
                throw InputError(where, "term must be [exponent, scalar string]");
            Exponent e = io_detail::parse_exponent(term[0], n, where + "/0");
            try {
                p.add_term(e, field.parse(term[1].get<std::string>()));
            } catch (const InputError&) {
                throw;
            } catch (const std::exception& ex) {
                throw InputError(where + "/1", ex.what());
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path, "cannot open file");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path, e.what());
    }
}

}  // namespace annseq

#endif
