#pragma once

// Machine-readable result records shared by the CLI subcommands.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "closed_form.hpp"
#include "core.hpp"
#include "delta.hpp"
#include "dispatch.hpp"
#include "minors.hpp"
#include "structure.hpp"

namespace tensor_jordan {

struct BlockEntry {
    std::int64_t size = 0;
    std::int64_t multiplicity = 0;

    friend bool operator==(const BlockEntry&, const BlockEntry&) = default;
};

struct Extras {
    std::optional<std::vector<int>> delta_flags;
    std::optional<std::vector<std::string>> roberts_determinants;  // decimal, exact
    std::optional<std::int64_t> nilpotency;
    std::optional<std::vector<std::int64_t>> dims;  // a_1, a_2, ...

    bool empty() const noexcept {
        return !delta_flags && !roberts_determinants && !nilpotency && !dims;
    }

    friend bool operator==(const Extras&, const Extras&) = default;
};

struct OutputRecord {
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::int64_t p = 0;
    bool alpha_zero = false;
    bool beta_zero = false;
    std::string method;
    std::string eigenvalue_class;
    std::vector<BlockEntry> blocks;
    std::optional<Extras> extras;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline Extras compute_extras(const BlockSpec& spec) {
    const auto n = spec.normalized();
    Extras ex;
    if (n.product_zero()) {
        ex.dims = zero_eigenvalue_dims(n);
        return ex;
    }
    ex.delta_flags = delta_sequence(n.s, n.t, n.characteristic).flags;
    std::vector<std::string> d;
    for (std::int64_t i = 0; i < n.s; ++i) d.push_back(roberts_determinant(n.s, n.t, i).str());
    ex.roberts_determinants = std::move(d);
    ex.nilpotency = nilpotency(n.s, n.t, n.characteristic);
    std::vector<std::int64_t> dims;
    for (const auto& rep : dimension_sweep(n.s, n.t, n.characteristic)) dims.push_back(rep.dim);
    ex.dims = std::move(dims);
    return ex;
}

inline OutputRecord make_record(const BlockSpec& spec, const DecomposeResult& result,
                                bool with_extras) {
    OutputRecord rec;
    rec.s = spec.s;
    rec.t = spec.t;
    rec.p = spec.p();
    rec.alpha_zero = spec.alpha_zero;
    rec.beta_zero = spec.beta_zero;
    rec.method = result.pipeline;
    rec.eigenvalue_class = to_string(result.decomposition.eigenvalue_class);
    for (auto [size, mult] : result.decomposition.blocks.multiplicities())
        rec.blocks.push_back({size, mult});
    if (with_extras) rec.extras = compute_extras(spec);
    return rec;
}

inline Partition blocks_partition(const OutputRecord& rec) {
    std::vector<std::int64_t> parts;
    for (const auto& b : rec.blocks) parts.insert(parts.end(), static_cast<std::size_t>(b.multiplicity), b.size);
    return Partition::from_unsorted(std::move(parts));
}

inline void to_json(nlohmann::json& j, const BlockEntry& b) {
    j = nlohmann::json{{"size", b.size}, {"multiplicity", b.multiplicity}};
}
inline void from_json(const nlohmann::json& j, BlockEntry& b) {
    j.at("size").get_to(b.size);
    j.at("multiplicity").get_to(b.multiplicity);
}

inline void to_json(nlohmann::json& j, const Extras& ex) {
    j = nlohmann::json::object();
    if (ex.delta_flags) j["delta_flags"] = *ex.delta_flags;
    if (ex.roberts_determinants) j["roberts_determinants"] = *ex.roberts_determinants;
    if (ex.nilpotency) j["nilpotency"] = *ex.nilpotency;
    if (ex.dims) j["dims"] = *ex.dims;
}
inline void from_json(const nlohmann::json& j, Extras& ex) {
    if (j.contains("delta_flags")) ex.delta_flags = j.at("delta_flags").get<std::vector<int>>();
    if (j.contains("roberts_determinants"))
        ex.roberts_determinants = j.at("roberts_determinants").get<std::vector<std::string>>();
    if (j.contains("nilpotency")) ex.nilpotency = j.at("nilpotency").get<std::int64_t>();
    if (j.contains("dims")) ex.dims = j.at("dims").get<std::vector<std::int64_t>>();
}

inline void to_json(nlohmann::json& j, const OutputRecord& r) {
    j = nlohmann::json{{"s", r.s},
                       {"t", r.t},
                       {"p", r.p},
                       {"alpha_zero", r.alpha_zero},
                       {"beta_zero", r.beta_zero},
                       {"method", r.method},
                       {"eigenvalue_class", r.eigenvalue_class},
                       {"blocks", r.blocks}};
    if (r.extras) j["extras"] = *r.extras;
}
inline void from_json(const nlohmann::json& j, OutputRecord& r) {
    j.at("s").get_to(r.s);
    j.at("t").get_to(r.t);
    j.at("p").get_to(r.p);
    j.at("alpha_zero").get_to(r.alpha_zero);
    j.at("beta_zero").get_to(r.beta_zero);
    j.at("method").get_to(r.method);
    j.at("eigenvalue_class").get_to(r.eigenvalue_class);
    j.at("blocks").get_to(r.blocks);
    if (j.contains("extras"))
        r.extras = j.at("extras").get<Extras>();
    else
        r.extras.reset();
}

inline std::string to_json_line(const OutputRecord& r) { return nlohmann::json(r).dump(); }

inline OutputRecord parse_json_record(const std::string& text) {
    return nlohmann::json::parse(text).get<OutputRecord>();
}

inline const char* csv_header() { return "s,t,p,alpha_zero,beta_zero,blocks"; }

inline std::string blocks_field(const OutputRecord& r) {
    std::string out;
    for (const auto& b : r.blocks) {
        if (!out.empty()) out += '+';
        out += std::to_string(b.size) + '^' + std::to_string(b.multiplicity);
    }
    return out;
}

inline std::string to_csv_row(const OutputRecord& r) {
    std::ostringstream os;
    os << r.s << ',' << r.t << ',' << r.p << ',' << (r.alpha_zero ? "true" : "false") << ','
       << (r.beta_zero ? "true" : "false") << ',' << blocks_field(r);
    return os.str();
}

/// Inverse of blocks_field: "8^1+4^3" -> entries.
inline std::vector<BlockEntry> parse_blocks_field(const std::string& field) {
    std::vector<BlockEntry> out;
    std::istringstream is(field);
    std::string token;
    while (std::getline(is, token, '+')) {
        const auto caret = token.find('^');
        if (caret == std::string::npos) throw invalid_input("malformed block token: " + token);
        out.push_back({std::stoll(token.substr(0, caret)), std::stoll(token.substr(caret + 1))});
    }
    return out;
}

inline std::string to_text(const OutputRecord& r) {
    std::ostringstream os;
    os << "J(" << (r.alpha_zero ? "0" : "alpha") << ", " << r.s << ") (x) J("
       << (r.beta_zero ? "0" : "beta") << ", " << r.t << ")  p=" << r.p << "  method=" << r.method
       << '\n';
    os << "eigenvalue: " << (r.eigenvalue_class == "zero" ? "0" : "alpha*beta") << '\n';
    os << "blocks: " << blocks_field(r) << '\n';
    if (r.extras) {
        const auto& ex = *r.extras;
        const auto join = [](const auto& values) {
            std::ostringstream js;
            for (std::size_t i = 0; i < values.size(); ++i) js << (i ? "," : "") << values[i];
            return js.str();
        };
        if (ex.delta_flags) os << "delta_flags: " << join(*ex.delta_flags) << '\n';
        if (ex.roberts_determinants) os << "roberts_determinants: " << join(*ex.roberts_determinants) << '\n';
        if (ex.nilpotency) os << "nilpotency: " << *ex.nilpotency << '\n';
        if (ex.dims) os << "dims: " << join(*ex.dims) << '\n';
    }
    return os.str();
}

namespace detail {

inline std::string coefficient_string(std::uint32_t v) { return std::to_string(v); }
inline std::string coefficient_string(const Rational& v) { return v.str(); }

}  // namespace detail

/// Nonzero terms of a homogeneous element as (x-exponent, y-exponent, coefficient).
template <class Field>
nlohmann::json element_terms(const GeneratingSet<Field>& set, const RElement<Field>& v) {
    auto terms = nlohmann::json::array();
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (set.field.is_zero(v[idx])) continue;
        const auto m = set.basis.monomial(idx);
        terms.push_back({{"x", m.x}, {"y", m.y}, {"coeff", detail::coefficient_string(v[idx])}});
    }
    return terms;
}

template <class Field>
nlohmann::json generators_to_json(const GeneratingSet<Field>& set, std::int64_t p) {
    nlohmann::json j{{"s", set.basis.s()}, {"t", set.basis.t()}, {"p", p}};
    j["socle_degrees"] = set.socle_degrees;
    auto gens = nlohmann::json::array();
    for (const auto& g : set.generators)
        gens.push_back({{"degree", g.degree},
                        {"chain_length", g.chain_length},
                        {"leading", g.is_leading()},
                        {"leading_index", g.leading_index},
                        {"x_shift", g.x_shift},
                        {"terms", element_terms(set, g.element)}});
    j["generators"] = std::move(gens);
    return j;
}

template <class Field>
std::string generators_to_text(const GeneratingSet<Field>& set, std::int64_t p) {
    std::ostringstream os;
    os << "R = k[x,y]/(x^" << set.basis.s() << ", y^" << set.basis.t() << ")  p=" << p << '\n';
    for (const auto& g : set.generators) {
        os << "w" << g.degree << "  degree " << g.degree << "  length " << g.chain_length << "  ";
        if (g.is_leading())
            os << "[leading kappa" << g.leading_index << "]";
        else
            os << "[kappa" << g.leading_index << " * x^" << g.x_shift << "]";
        os << "  ";
        bool first = true;
        for (const auto& term : element_terms(set, g.element)) {
            if (!first) os << " + ";
            first = false;
            os << term["coeff"].template get<std::string>() << "*x^"
               << term["x"].template get<std::int64_t>() << "*y^"
               << term["y"].template get<std::int64_t>();
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace tensor_jordan
