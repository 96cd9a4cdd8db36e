// curvehodge: Hodge invariants of plane curve complements and the Hodge vs pole-order gap.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvehodge/curve_io.hpp"
#include "curvehodge/errors.hpp"
#include "curvehodge/parser.hpp"
#include "curvehodge/report.hpp"

namespace {

using namespace curvehodge;

enum Exit { kOk = 0, kInconsistent = 1, kUsage = 2 };

constexpr const char* kGrammar =
    "Polynomials use x, y, z, integer literals, + - * ^ and parentheses.\n"
    "Multiplication is explicit (write 2*x, not 2x); exponents are nonnegative integer literals.\n"
    "Example: x*y*z*(x^3 + y^3 + z^3)";

struct Config {
    std::string spec_path;
    std::string poly;
    std::string poly_file;
    std::string mode = "certified";
    std::optional<int> r_max;
    int window = 3;
    std::string format = "text";
    std::size_t prime_count = 3;
    std::vector<std::uint64_t> primes;
    std::uint64_t seed = RankOptions{}.seed;
};

RankOptions rank_options(const Config& c) {
    RankOptions o;
    const auto mode = parse_rank_mode(c.mode);
    if (!mode) throw InputError("unknown mode '" + c.mode + "'");
    o.mode = *mode;
    o.prime_count = c.prime_count;
    o.primes = c.primes;
    o.seed = c.seed;
    return o;
}

Polynomial read_polynomial(const Config& c) {
    if (!c.poly.empty() && !c.poly_file.empty()) throw InputError("give either a polynomial or --poly-file, not both");
    if (!c.poly_file.empty()) {
        std::ifstream in(c.poly_file);
        if (!in) throw InputError("cannot read " + c.poly_file);
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_poly(ss.str());
    }
    if (c.poly.empty()) throw InputError("a polynomial is required (argument or --poly-file)");
    return parse_poly(c.poly);
}

template <typename Report>
void emit(const Config& c, const Report& report) {
    if (c.format == "json")
        std::cout << to_json(report).dump(2) << "\n";
    else
        std::cout << render_text(report);
}

int cmd_hodge(const Config& c) {
    const HodgeSummary s = summarize_hodge(load_spec(c.spec_path));
    emit(c, s);
    return s.consistent() ? kOk : kInconsistent;
}

int cmd_milnor(const Config& c) {
    const MilnorSummary s = summarize_milnor(read_polynomial(c), c.r_max, rank_options(c), c.window);
    emit(c, s);
    return kOk;
}

int cmd_gap(const Config& c) {
    const CurveSpec spec = load_spec(c.spec_path);
    const Polynomial f = read_polynomial(c);
    GapOptions o;
    o.rank = rank_options(c);
    o.window = c.window;
    o.r_max = c.r_max;
    if (c.r_max && *c.r_max < 2 * spec.degree() - 3)
        throw InputError("--rmax must be at least 2N-3 = " + std::to_string(2 * spec.degree() - 3));
    const GapReport g = gap(spec, f, o);
    emit(c, g);
    return g.consistent() ? kOk : kInconsistent;
}

int cmd_validate(const Config& c) {
    const ValidationReport v = validate_spec(load_spec(c.spec_path));
    emit(c, v);
    return v.valid() ? kOk : kInconsistent;
}

void add_rank_flags(CLI::App* sub, Config& c) {
    sub->add_option("--mode", c.mode, "Rank computation: exact, modular or certified")
        ->check(CLI::IsMember({"exact", "modular", "certified"}))
        ->capture_default_str();
    sub->add_option("--rmax", c.r_max, "Largest degree of the Milnor profile")->check(CLI::NonNegativeNumber);
    sub->add_option("--window", c.window, "Equal trailing values that count as stabilized")
        ->check(CLI::Range(2, 1000))
        ->capture_default_str();
    sub->add_option("--primes", c.prime_count, "Number of random primes in certified mode")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    sub->add_option("--prime", c.primes, "Use this prime instead of a random one (repeatable)");
    sub->add_option("--seed", c.seed, "Seed for drawing random primes");
}

void add_poly_args(CLI::App* sub, Config& c) {
    sub->add_option("poly", c.poly, "Homogeneous polynomial in x, y, z");
    sub->add_option("--poly-file", c.poly_file, "Read the polynomial from a file")->check(CLI::ExistingFile);
}

}  // namespace

int main(int argc, char** argv) {
    Config c;
    CLI::App app{"Hodge invariants of complements of plane curves"};
    app.footer(kGrammar);
    app.require_subcommand(1);
    app.add_option("--format", c.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* hodge = app.add_subcommand("hodge", "Hodge-Deligne polynomials and graded dimensions from a curve spec");
    hodge->add_option("spec", c.spec_path, "Curve spec (JSON)")->required()->check(CLI::ExistingFile);

    auto* milnor = app.add_subcommand("milnor", "Graded Milnor algebra dimensions of a polynomial");
    add_poly_args(milnor, c);
    add_rank_flags(milnor, c);

    auto* gapc = app.add_subcommand("gap", "Gap between pole-order and Hodge filtrations on H^2");
    gapc->add_option("spec", c.spec_path, "Curve spec (JSON)")->required()->check(CLI::ExistingFile);
    add_poly_args(gapc, c);
    add_rank_flags(gapc, c);

    auto* validate = app.add_subcommand("validate", "Check a curve spec and list its singular points");
    validate->add_option("spec", c.spec_path, "Curve spec (JSON)")->required()->check(CLI::ExistingFile);

    for (auto* sub : {hodge, milnor, gapc, validate})
        sub->add_option("--format", c.format, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*hodge) return cmd_hodge(c);
        if (*milnor) return cmd_milnor(c);
        if (*gapc) return cmd_gap(c);
        return cmd_validate(c);
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const HypothesisError& e) {
        std::cerr << "error: hypothesis not satisfied: " << e.what() << "\n";
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kUsage;
}
