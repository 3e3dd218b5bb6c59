// tensor-jordan: Jordan types of J(alpha, s) (x) J(beta, t) from the command line.
//
//   tensor-jordan decompose --s 4 --t 5 --p 2 [--alpha-zero] [--beta-zero]
//                           [--method auto|delta|minors|oracle|char0]
//                           [--format text|json|csv] [--extras]
//   tensor-jordan compare   --smax 6 --tmax 6 --primes 2,3,5,0 [--methods delta,minors,oracle]
//   tensor-jordan table     --smax 5 --tmax 8 --primes 2,3 [--format csv|json] [--extras]
//   tensor-jordan generators --s 4 --t 5 --p 2 [--format text|json]
//
// Exit codes: 0 success, 1 comparison mismatch, 2 invalid input,
// 3 internal consistency failure.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <tensor_jordan/tensor_jordan.hpp>

namespace tj = tensor_jordan;

namespace {

constexpr int kMismatch = 1;
constexpr int kInvalidInput = 2;
constexpr int kConsistency = 3;

struct Grid {
    std::int64_t smin = 1;
    std::int64_t smax = 1;
    std::int64_t tmin = 1;
    std::int64_t tmax = 1;
    std::vector<std::int64_t> primes;
    bool alpha_zero = false;
    bool beta_zero = false;
};

std::vector<tj::Characteristic> characteristics(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<tj::Characteristic> out;
    for (auto v : values) out.emplace_back(v);
    return out;
}

// Cells (s, t, p) with s <= t in lexicographic order.
std::vector<tj::BlockSpec> grid_specs(const Grid& g) {
    if (g.smin < 1 || g.tmin < 1) throw tj::invalid_input("grid bounds must be >= 1");
    if (g.primes.empty()) throw tj::invalid_input("--primes must list at least one characteristic");
    const auto chars = characteristics(g.primes);
    std::vector<tj::BlockSpec> out;
    for (auto s = g.smin; s <= g.smax; ++s)
        for (auto t = std::max(s, g.tmin); t <= g.tmax; ++t)
            for (auto p : chars) out.emplace_back(s, t, g.alpha_zero, g.beta_zero, p);
    return out;
}

std::string emit(const tj::OutputRecord& rec, const std::string& format) {
    if (format == "json") return tj::to_json_line(rec) + "\n";
    if (format == "csv") return std::string(tj::csv_header()) + "\n" + tj::to_csv_row(rec) + "\n";
    return tj::to_text(rec);
}

tj::Method method_from(const std::string& name) {
    const auto m = tj::parse_method(name);
    if (!m) throw tj::invalid_input("unknown method: " + name);
    return *m;
}

void add_grid_options(CLI::App* cmd, Grid& g) {
    cmd->add_option("--smin", g.smin, "smallest s")->capture_default_str();
    cmd->add_option("--smax", g.smax, "largest s")->required();
    cmd->add_option("--tmin", g.tmin, "smallest t")->capture_default_str();
    cmd->add_option("--tmax", g.tmax, "largest t")->required();
    cmd->add_option("--primes", g.primes, "characteristics, 0 allowed")->delimiter(',')->required();
    cmd->add_flag("--alpha-zero", g.alpha_zero, "alpha = 0");
    cmd->add_flag("--beta-zero", g.beta_zero, "beta = 0");
}

int run_compare(const Grid& grid, std::vector<std::string> method_names) {
    std::vector<tj::Method> methods;
    for (const auto& name : method_names) methods.push_back(method_from(name));
    if (methods.size() < 2) throw tj::invalid_input("compare needs at least two methods");

    std::ostringstream mismatches;
    std::size_t cases = 0, bad = 0;
    for (const auto& spec : grid_specs(grid)) {
        ++cases;
        std::vector<tj::DecomposeResult> results;
        for (auto m : methods) results.push_back(tj::decompose(spec, m));
        const bool agree = std::all_of(results.begin(), results.end(), [&](const auto& r) {
            return r.decomposition == results.front().decomposition;
        });
        if (agree) continue;
        ++bad;
        for (std::size_t i = 0; i < methods.size(); ++i)
            mismatches << spec.s << '\t' << spec.t << '\t' << spec.p() << '\t'
                       << tj::to_string(methods[i]) << '\t'
                       << tj::format_blocks(results[i].decomposition.blocks) << '\n';
    }
    if (bad > 0) {
        std::cout << "s\tt\tp\tmethod\tblocks\n" << mismatches.str();
    }
    std::cout << "compared " << cases << " cases with " << methods.size() << " methods: " << bad
              << " mismatches\n";
    return bad == 0 ? 0 : kMismatch;
}

int run_table(const Grid& grid, const std::string& method, const std::string& format, bool extras) {
    const auto m = method_from(method);
    const auto specs = grid_specs(grid);
    std::ostringstream out;
    if (format == "csv") out << tj::csv_header() << '\n';
    for (const auto& spec : specs) {
        const auto rec = tj::make_record(spec, tj::decompose(spec, m), extras && format == "json");
        out << (format == "csv" ? tj::to_csv_row(rec) : tj::to_json_line(rec)) << '\n';
    }
    std::cout << out.str();
    return 0;
}

int run_generators(std::int64_t s, std::int64_t t, std::int64_t p, const std::string& format) {
    const tj::BlockSpec spec = tj::BlockSpec::nonzero(s, t, tj::Characteristic(p)).normalized();
    return tj::with_field(spec.characteristic, [&](const auto& field) {
        const auto set = tj::build_generating_set(field, spec.s, spec.t);
        if (format == "json")
            std::cout << tj::generators_to_json(set, p).dump(2) << '\n';
        else
            std::cout << tj::generators_to_text(set, p);
        return 0;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jordan types of tensor products of Jordan blocks"};
    app.require_subcommand(1);

    std::int64_t s = 1, t = 1, p = 0;
    bool alpha_zero = false, beta_zero = false, extras = false;
    std::string method = "auto", format = "text";

    auto* decompose = app.add_subcommand("decompose", "Jordan type of one tensor product");
    decompose->add_option("--s", s, "size of the first block")->required();
    decompose->add_option("--t", t, "size of the second block")->required();
    decompose->add_option("--p", p, "characteristic (0 or prime)")->required();
    decompose->add_flag("--alpha-zero", alpha_zero, "first eigenvalue is 0");
    decompose->add_flag("--beta-zero", beta_zero, "second eigenvalue is 0");
    decompose->add_option("--method", method, "auto, delta, minors, oracle or char0")->capture_default_str();
    decompose->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    decompose->add_flag("--extras", extras, "include flag sequence, determinants, nilpotency, dims");

    Grid compare_grid;
    std::vector<std::string> methods{"delta", "minors", "oracle"};
    auto* compare = app.add_subcommand("compare", "cross-check pipelines over a grid");
    add_grid_options(compare, compare_grid);
    compare->add_option("--methods", methods, "methods to compare")->delimiter(',');

    Grid table_grid;
    std::string table_format = "csv", table_method = "auto";
    bool table_extras = false;
    auto* table = app.add_subcommand("table", "one record per (s, t, p)");
    add_grid_options(table, table_grid);
    table->add_option("--format", table_format, "csv or json (one object per line)")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    table->add_option("--method", table_method, "auto, delta, minors, oracle or char0")->capture_default_str();
    table->add_flag("--extras", table_extras, "include extras (json only)");

    std::int64_t gs = 1, gt = 1, gp = 0;
    std::string gen_format = "text";
    auto* generators = app.add_subcommand("generators", "homogeneous generating set of R");
    generators->add_option("--s", gs, "size of the first block")->required();
    generators->add_option("--t", gt, "size of the second block")->required();
    generators->add_option("--p", gp, "characteristic (0 or prime)")->required();
    generators->add_option("--format", gen_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInvalidInput;
    }

    try {
        if (*decompose) {
            const tj::BlockSpec spec(s, t, alpha_zero, beta_zero, tj::Characteristic(p));
            const auto rec = tj::make_record(spec, tj::decompose(spec, method_from(method)), extras);
            std::cout << emit(rec, format);
            return 0;
        }
        if (*compare) return run_compare(compare_grid, methods);
        if (*table) return run_table(table_grid, table_method, table_format, table_extras);
        if (*generators) return run_generators(gs, gt, gp, gen_format);
    } catch (const tj::invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const tj::consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return kConsistency;
    }
    return 0;
}
