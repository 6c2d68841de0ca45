#pragma once

#include "lieva/algebra_library.hpp"
#include "lieva/parser.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace lieva {

inline nlohmann::json field_to_json(const RationalField&) {
    return nlohmann::json{{"tag", "rationals"}};
}
inline nlohmann::json field_to_json(const PrimeField& f) {
    return nlohmann::json{{"tag", "prime_field"}, {"p", f.prime()}};
}
inline nlohmann::json field_to_json(const PadicField& f) {
    return nlohmann::json{{"tag", "padic"}, {"p", f.prime()}, {"N", f.precision()}};
}

inline std::string scalar_to_literal(const RationalField&, const BigRational& x) {
    return x.to_string();
}
inline std::string scalar_to_literal(const PrimeField&, const PrimeFieldElement& x) {
    return x.to_string();
}
inline std::string scalar_to_literal(const PadicField&, const PadicScaled& x) {
    return x.to_string();
}

inline BigRational scalar_from_literal(const RationalField&, const std::string& s) {
    return parse_rational(s);
}
inline PrimeFieldElement scalar_from_literal(const PrimeField& f, const std::string& s) {
    return f.from_rational(parse_rational(s));
}
// Accepts a full p-adic literal, whose parameters must match the declared
// field, or a plain rational, which is embedded at the field's precision.
inline PadicScaled scalar_from_literal(const PadicField& f, const std::string& s) {
    const std::size_t first = s.find_first_not_of(" \t");
    if (first != std::string::npos && s.compare(first, 6, "padic(") == 0) {
        PadicScaled x = parse_padic(s);
        if (x.prime() != f.prime() || x.precision() != f.precision())
            throw std::invalid_argument(
                "p-adic literal parameters do not match the declared field: " + s);
        return x;
    }
    return f.from_rational(parse_rational(s));
}

// {field, dim, basis, brackets: [{j, l, coords}]} with 1-based basis indices;
// only nonzero products are listed, and omitted pairs mean zero.
template <FieldContext F>
nlohmann::json table_to_json(const StructureConstants<F>& sc) {
    const F& f = sc.field();
    nlohmann::json out;
    out["field"] = field_to_json(f);
    out["dim"] = sc.dim();
    out["basis"] = sc.basis_names();
    nlohmann::json brackets = nlohmann::json::array();
    for (std::size_t j = 0; j < sc.dim(); ++j) {
        for (std::size_t l = 0; l < sc.dim(); ++l) {
            const auto& coords = sc.product(j, l);
            if (vec_is_zero(f, coords)) continue;
            nlohmann::json lits = nlohmann::json::array();
            for (const auto& c : coords) lits.push_back(scalar_to_literal(f, c));
            brackets.push_back(
                nlohmann::json{{"j", j + 1}, {"l", l + 1}, {"coords", std::move(lits)}});
        }
    }
    out["brackets"] = std::move(brackets);
    return out;
}

template <FieldContext F>
StructureConstants<F> table_body_from_json(const nlohmann::json& j, const F& f) {
    const auto dim_raw = j.at("dim").get<std::int64_t>();
    if (dim_raw < 1 || dim_raw > 256) throw std::invalid_argument("table: dim out of range");
    const auto dim = static_cast<std::size_t>(dim_raw);
    std::vector<std::string> basis = j.at("basis").get<std::vector<std::string>>();
    if (basis.size() != dim)
        throw std::invalid_argument("table: basis name count disagrees with dim");
    StructureConstants<F> sc(f, std::move(basis));

    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& entry : j.at("brackets")) {
        const auto jj_raw = entry.at("j").get<std::int64_t>();
        const auto ll_raw = entry.at("l").get<std::int64_t>();
        if (jj_raw < 1 || ll_raw < 1 || static_cast<std::size_t>(jj_raw) > dim ||
            static_cast<std::size_t>(ll_raw) > dim)
            throw std::invalid_argument("table: bracket index out of range (indices are 1-based)");
        const auto jj = static_cast<std::size_t>(jj_raw);
        const auto ll = static_cast<std::size_t>(ll_raw);
        if (!seen.insert({jj, ll}).second)
            throw std::invalid_argument("table: duplicate bracket entry (" + std::to_string(jj) +
                                        ", " + std::to_string(ll) + ")");
        const auto& lits = entry.at("coords");
        if (!lits.is_array() || lits.size() != dim)
            throw std::invalid_argument("table: coords must list one scalar per basis element");
        FieldVec<F> coords;
        coords.reserve(dim);
        for (const auto& lit : lits) coords.push_back(scalar_from_literal(f, lit.get<std::string>()));
        sc.set_product(jj - 1, ll - 1, std::move(coords));
    }
    return sc;
}

using AnyTable = std::variant<StructureConstants<RationalField>, StructureConstants<PrimeField>,
                              StructureConstants<PadicField>>;

inline AnyTable table_from_json(const nlohmann::json& j) {
    const auto& field = j.at("field");
    const auto tag = field.at("tag").get<std::string>();
    if (tag == "rationals") return table_body_from_json(j, RationalField{});
    if (tag == "prime_field")
        return table_body_from_json(j, PrimeField(field.at("p").get<std::uint32_t>()));
    if (tag == "padic")
        return table_body_from_json(
            j, PadicField(field.at("p").get<std::uint32_t>(), field.at("N").get<int>()));
    throw std::invalid_argument("table: unknown field tag: " + tag);
}

inline AnyTable load_table_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path.string());
    return table_from_json(nlohmann::json::parse(in));
}

// Arguments naming a readable file win; otherwise the name is resolved in the
// bundled library directory, with or without the .json suffix.
inline AnyTable load_table(const std::string& name_or_path, const std::filesystem::path& data_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (fs::is_regular_file(name_or_path, ec)) return load_table_file(name_or_path);
    const fs::path with_suffix = data_dir / (name_or_path + ".json");
    if (fs::is_regular_file(with_suffix, ec)) return load_table_file(with_suffix);
    const fs::path bare = data_dir / name_or_path;
    if (fs::is_regular_file(bare, ec)) return load_table_file(bare);
    throw std::runtime_error("no such algebra table: " + name_or_path + " (looked in " +
                             data_dir.string() + ")");
}

}  // namespace lieva
