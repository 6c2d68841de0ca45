#include "lieva/suites.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace lieva;

// Bundled tables live next to the binary by default; LIEVA_DATA overrides.
std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("LIEVA_DATA"); env && *env) return env;
    std::error_code ec;
    const auto exe = std::filesystem::read_symlink("/proc/self/exe", ec);
    if (!ec) return exe.parent_path() / "data";
    return std::filesystem::current_path() / "data";
}

// ---------------------------------------------------------------------------
// compute: parse a scalar, polynomial, or matrix literal and print it back in
// canonical form
// ---------------------------------------------------------------------------

using AnyMatrix = std::variant<Matrix<RationalField>, Matrix<PadicField>,
                               Matrix<QuaternionRing>, Matrix<PolynomialRing<RationalField>>>;

// A matrix literal is a JSON array of equal-length rows of scalar literals.
// The entry kind is unified upward: rationals embed into whichever richer
// scalar kind appears (p-adic, quaternion, or polynomial); mixing two richer
// kinds is rejected.
AnyMatrix parse_matrix_literal(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("matrix literal: ") + e.what(), 0);
    }
    if (!j.is_array() || j.empty()) throw ParseError("matrix literal: expected rows", 0);
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<std::vector<ParsedScalar>> grid;
    grid.reserve(rows);
    for (const auto& row : j) {
        if (!row.is_array() || row.empty())
            throw ParseError("matrix literal: each row must be a nonempty array", 0);
        if (cols == 0) cols = row.size();
        if (row.size() != cols) throw ParseError("matrix literal: ragged rows", 0);
        std::vector<ParsedScalar> out;
        out.reserve(cols);
        for (const auto& cell : row) {
            if (!cell.is_string())
                throw ParseError("matrix literal: entries must be literal strings", 0);
            out.push_back(parse_scalar_expr(cell.get<std::string>()));
        }
        grid.push_back(std::move(out));
    }

    bool has_padic = false, has_quat = false, has_poly = false;
    std::optional<std::pair<std::uint32_t, int>> padic_params;
    std::size_t nvars = 1;
    for (const auto& row : grid)
        for (const auto& cell : row) {
            if (const auto* x = std::get_if<PadicScaled>(&cell)) {
                has_padic = true;
                const std::pair<std::uint32_t, int> params{x->prime(), x->precision()};
                if (padic_params && *padic_params != params)
                    throw ParseError("matrix literal: mixed p-adic parameters", 0);
                padic_params = params;
            } else if (std::holds_alternative<Quaternion>(cell)) {
                has_quat = true;
            } else if (const auto* f = std::get_if<Polynomial<RationalField>>(&cell)) {
                has_poly = true;
                nvars = std::max(nvars, f->nvars());
            }
        }
    if (has_padic + has_quat + has_poly > 1)
        throw ParseError("matrix literal: entries mix incompatible scalar kinds", 0);

    if (has_padic) {
        const PadicField f(padic_params->first, padic_params->second);
        Matrix<PadicField> m(f, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t l = 0; l < cols; ++l)
                m.at(i, l) = std::holds_alternative<PadicScaled>(grid[i][l])
                                 ? std::get<PadicScaled>(grid[i][l])
                                 : f.from_rational(std::get<BigRational>(grid[i][l]));
        return m;
    }
    if (has_quat) {
        const QuaternionRing f;
        Matrix<QuaternionRing> m(f, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t l = 0; l < cols; ++l)
                m.at(i, l) = std::holds_alternative<Quaternion>(grid[i][l])
                                 ? std::get<Quaternion>(grid[i][l])
                                 : Quaternion(std::get<BigRational>(grid[i][l]));
        return m;
    }
    if (has_poly) {
        const RationalField q;
        const PolynomialRing<RationalField> f(q, nvars);
        using P = Polynomial<RationalField>;
        // Re-embed every entry at the widest variable count so the ring of
        // the matrix is uniform; missing variables get exponent zero.
        auto widen = [&](const P& p) {
            if (p.nvars() == nvars) return p;
            P acc(q, nvars);
            for (const auto& [m, c] : p.terms()) {
                std::vector<std::uint32_t> exps(nvars, 0);
                for (std::size_t v = 0; v < p.nvars(); ++v) exps[v] = m[v];
                acc = acc + P::monomial(q, MultiIndex(std::move(exps)), c);
            }
            return acc;
        };
        Matrix<PolynomialRing<RationalField>> m(f, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t l = 0; l < cols; ++l) {
                if (const auto* p = std::get_if<P>(&grid[i][l]))
                    m.at(i, l) = widen(*p);
                else
                    m.at(i, l) = P::constant(q, nvars, std::get<BigRational>(grid[i][l]));
            }
        return m;
    }
    const RationalField q;
    Matrix<RationalField> m(q, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t l = 0; l < cols; ++l) m.at(i, l) = std::get<BigRational>(grid[i][l]);
    return m;
}

template <RingContext C>
nlohmann::json matrix_rows_json(const Matrix<C>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t l = 0; l < m.cols(); ++l) row.push_back(m.ctx().to_string(m.at(i, l)));
        rows.push_back(std::move(row));
    }
    return rows;
}

int run_compute(const std::string& expr, const std::string& format) {
    std::string kind;
    nlohmann::json value;
    const std::size_t first = expr.find_first_not_of(" \t");
    if (first != std::string::npos && expr[first] == '[') {
        const AnyMatrix m = parse_matrix_literal(expr);
        kind = "matrix";
        std::visit([&](const auto& mm) { value = matrix_rows_json(mm); }, m);
    } else {
        const ParsedScalar v = parse_scalar_expr(expr);
        if (const auto* x = std::get_if<BigRational>(&v)) {
            kind = "rational";
            value = x->to_string();
        } else if (const auto* x = std::get_if<PadicScaled>(&v)) {
            kind = "padic";
            value = x->to_string();
        } else if (const auto* x = std::get_if<Quaternion>(&v)) {
            kind = "quaternion";
            value = x->to_string();
        } else {
            kind = "polynomial";
            value = std::get<Polynomial<RationalField>>(v).to_string();
        }
    }
    if (format == "json") {
        nlohmann::json out;
        out["kind"] = kind;
        out["value"] = value;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// info: load a structure-constant table and summarize it
// ---------------------------------------------------------------------------

int run_info(const std::string& name, const std::string& format,
             const std::filesystem::path& data_dir) {
    const AnyTable table = load_table(name, data_dir);
    nlohmann::json out;
    std::visit(
        [&](const auto& sc) {
            const auto& f = sc.field();
            out["algebra"] = name;
            out["field"] = field_to_json(f);
            out["dim"] = sc.dim();
            out["basis"] = sc.basis_names();
            long nonzero = 0;
            for (std::size_t j = 0; j < sc.dim(); ++j)
                for (std::size_t l = 0; l < sc.dim(); ++l)
                    if (!vec_is_zero(f, sc.product(j, l))) ++nonzero;
            out["nonzero_products"] = nonzero;
            const auto lie = verify_lie(sc);
            out["lie_axioms"] = nlohmann::json{{"alternating", lie.antisymmetric},
                                               {"jacobi", lie.jacobi},
                                               {"pass", lie.pass()}};
            out["center_dim"] = center_basis(sc).size();
            out["derived_ideal_dim"] = derived_ideal_basis(sc).size();
        },
        table);
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "algebra: " << name << "\n";
        std::cout << "field: " << out["field"].dump() << "\n";
        std::cout << "dim: " << out["dim"].get<std::size_t>() << "\n";
        std::cout << "basis:";
        for (const auto& b : out["basis"]) std::cout << " " << b.get<std::string>();
        std::cout << "\n";
        std::cout << "nonzero products: " << out["nonzero_products"].get<long>() << "\n";
        std::cout << "lie axioms: "
                  << (out["lie_axioms"]["pass"].get<bool>() ? "pass" : "FAIL") << " (alternating "
                  << (out["lie_axioms"]["alternating"].get<bool>() ? "yes" : "no") << ", jacobi "
                  << (out["lie_axioms"]["jacobi"].get<bool>() ? "yes" : "no") << ")\n";
        std::cout << "center dim: " << out["center_dim"].get<std::size_t>() << "\n";
        std::cout << "derived ideal dim: " << out["derived_ideal_dim"].get<std::size_t>() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for Lie-algebra, series, and p-adic identities"};
    app.require_subcommand(1);

    std::string suite, algebra, mode = "all", format = "json", expr, table;
    std::uint64_t seed = 0;
    long trials = 0, truncation = 0;
    std::uint32_t prime = 0;
    int precision = 0;
    std::size_t dim = 0;

    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    verify->add_option("suite", suite, "Suite name (see below)")->required();
    verify->add_option("--algebra", algebra, "Structure-constant table: bundled name or file path");
    verify->add_option("--mode", mode, "det-exp-tr calculus: float, series, padic, or all");
    auto* seed_opt = verify->add_option("--seed", seed, "Random seed (required for randomized suites)");
    auto* trials_opt = verify->add_option("--trials", trials, "Trial count override");
    auto* prime_opt = verify->add_option("--prime", prime, "Prime p for p-adic and finite-field runs");
    auto* prec_opt = verify->add_option("--precision", precision, "Significant p-adic digits");
    auto* trunc_opt = verify->add_option("--truncation", truncation, "Series truncation / degree cap");
    auto* dim_opt = verify->add_option("--dim", dim, "Dimension cap (suite-specific meaning)");
    verify->add_option("--format", format, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    std::string names;
    for (const auto& n : lieva::suite_names()) names += "\n  " + n;
    verify->footer("Suites:" + names);

    auto* compute = app.add_subcommand("compute", "Parse a literal and print its canonical form");
    compute->add_option("expr", expr, "Scalar, polynomial, or matrix literal")->required();
    compute->add_option("--format", format, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* info = app.add_subcommand("info", "Summarize a structure-constant table");
    info->add_option("table", table, "Bundled table name or file path")->required();
    info->add_option("--format", format, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::filesystem::path data_dir = default_data_dir();
    try {
        if (verify->parsed()) {
            lieva::SuiteSpec spec;
            spec.suite = suite;
            spec.algebra = algebra;
            spec.mode = mode;
            if (seed_opt->count()) spec.seed = seed;
            if (trials_opt->count()) spec.trials = trials;
            if (prime_opt->count()) spec.prime = prime;
            if (prec_opt->count()) spec.precision = precision;
            if (trunc_opt->count()) spec.truncation = truncation;
            if (dim_opt->count()) spec.dim = dim;
            const lieva::SuiteReport rep = lieva::run_suite(spec, data_dir);
            if (format == "json")
                std::cout << lieva::report_json_string(rep);
            else
                std::cout << lieva::report_to_text(rep);
            return rep.pass ? 0 : 1;
        }
        if (compute->parsed()) return run_compute(expr, format);
        return run_info(table, format, data_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
