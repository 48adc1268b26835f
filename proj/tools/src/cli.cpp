#include "hplus/cli/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "hplus/bessel.hpp"
#include "hplus/free_bessel.hpp"
#include "hplus/hypercube.hpp"
#include "hplus/hyperoctahedral.hpp"
#include "hplus/partition.hpp"
#include "hplus/weingarten.hpp"
#include "hplus/verify/criteria.hpp"

namespace hplus::cli {

namespace {

using nlohmann::ordered_json;

/// A command result: canonical JSON plus a flat table for CSV mode.
struct Artifact {
    ordered_json json;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    int exit_code = kSuccess;
};

struct Config {
    std::string flavor = "h";
    int k = 0;
    long n = 0;
    long s = 0;
    std::string t;
    int order = 0;
    std::uint64_t seed = 1;
    std::uint64_t samples = 100000;
    std::string format = "json";
    std::string output;
    bool allow_small_n = false;
    std::vector<int> i;
    std::vector<int> j;
    std::vector<std::string> intervals;
    std::vector<std::string> pattern;
    std::vector<int> only;
};

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

ordered_json to_json(const SetPartition& p) {
    ordered_json blocks = ordered_json::array();
    for (const auto& b : p.blocks()) blocks.push_back(b);
    return blocks;
}

ordered_json to_json(const RationalMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json to_json(const RationalPolynomial& p) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
    return coeffs;
}

ordered_json to_json(const FormalSeries& f) {
    ordered_json coeffs = ordered_json::array();
    for (int d = 0; d <= f.order(); ++d) coeffs.push_back(to_json(f[d]));
    return coeffs;
}

ordered_json to_json(const AtomicMeasure& m) {
    ordered_json atoms = ordered_json::object();
    for (const auto& [x, w] : m.atoms()) atoms[std::to_string(x)] = w;
    return {{"atoms", atoms}, {"kmax", m.kmax()}, {"pmax", m.pmax()}, {"mass_deficit", m.mass_deficit()}};
}

Flavor flavor_of(const Config& c) { return parse_flavor(c.flavor); }

Rational parse_t(const Config& c) {
    if (c.t.empty()) throw std::invalid_argument("--t is required");
    return Rational::parse(c.t);
}

void require_positive(long value, const char* name) {
    if (value <= 0) throw std::invalid_argument(std::string("--") + name + " must be positive");
}

Artifact partitions_cmd(const Config& c) {
    require_positive(c.k, "k");
    const auto list = enumerate_nc(c.k, flavor_of(c));
    Artifact a;
    ordered_json parts = ordered_json::array();
    a.header = {"index", "blocks", "partition"};
    for (std::size_t idx = 0; idx < list.size(); ++idx) {
        parts.push_back(to_json(list[idx]));
        a.rows.push_back({std::to_string(idx + 1), std::to_string(list[idx].block_count()), list[idx].str()});
    }
    a.json = {{"k", c.k}, {"flavor", c.flavor}, {"count", list.size()}, {"partitions", parts}};
    return a;
}

void matrix_rows(Artifact& a, const char* name, const RationalMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t col = 0; col < m.cols(); ++col)
            a.rows.push_back({name, std::to_string(r + 1), std::to_string(col + 1), m(r, col).str()});
}

Artifact gram_cmd(const Config& c, bool with_inverse) {
    require_positive(c.k, "k");
    require_positive(c.n, "n");
    const GramOptions options{c.allow_small_n};
    Artifact a;
    a.header = {"matrix", "row", "col", "value"};
    ordered_json basis = ordered_json::array();
    auto fill = [&](const GramPair& pair) {
        for (const auto& p : pair.basis) basis.push_back(to_json(p));
        a.json = {{"k", c.k}, {"n", c.n}, {"flavor", c.flavor}, {"basis", basis}, {"gram", to_json(pair.gram)}};
        matrix_rows(a, "gram", pair.gram);
        if (pair.weingarten) {
            a.json["weingarten"] = to_json(*pair.weingarten);
            matrix_rows(a, "weingarten", *pair.weingarten);
        }
    };
    if (with_inverse) {
        fill(*weingarten_matrix(c.k, c.n, flavor_of(c), options));
    } else {
        fill(gram_matrix(c.k, c.n, flavor_of(c), options));
    }
    return a;
}

Artifact integrate_cmd(const Config& c) {
    require_positive(c.n, "n");
    const Rational value = integrate_monomial(c.i, c.j, c.n, flavor_of(c), GramOptions{c.allow_small_n});
    Artifact a;
    a.json = {{"n", c.n}, {"flavor", c.flavor}, {"i", c.i}, {"j", c.j}, {"value", value.str()}};
    std::ostringstream i, j;
    for (std::size_t x = 0; x < c.i.size(); ++x) i << (x ? " " : "") << c.i[x];
    for (std::size_t x = 0; x < c.j.size(); ++x) j << (x ? " " : "") << c.j[x];
    a.header = {"n", "flavor", "i", "j", "value"};
    a.rows.push_back({std::to_string(c.n), c.flavor, i.str(), j.str(), value.str()});
    return a;
}

Artifact moment_cmd(const Config& c) {
    require_positive(c.k, "k");
    require_positive(c.n, "n");
    const Rational value = character_moment(c.k, c.n, c.s, flavor_of(c), GramOptions{c.allow_small_n});
    Artifact a;
    a.json = {{"k", c.k}, {"n", c.n}, {"s", c.s}, {"flavor", c.flavor}, {"value", value.str()}};
    a.header = {"k", "n", "s", "flavor", "value"};
    a.rows.push_back({std::to_string(c.k), std::to_string(c.n), std::to_string(c.s), c.flavor, value.str()});
    return a;
}

Artifact mixed_moment_cmd(const Config& c) {
    require_positive(c.n, "n");
    if (c.intervals.empty()) throw std::invalid_argument("at least one --interval name=a:b is required");
    if (c.pattern.empty()) throw std::invalid_argument("--pattern is required");
    std::vector<std::string> names;
    std::vector<IndexInterval> intervals;
    ordered_json interval_json = ordered_json::object();
    for (const auto& text : c.intervals) {
        const auto eq = text.find('=');
        const auto colon = text.find(':', eq == std::string::npos ? 0 : eq);
        if (eq == std::string::npos || eq == 0 || colon == std::string::npos)
            throw std::invalid_argument("interval '" + text + "' is not of the form name=a:b");
        const std::string name = text.substr(0, eq);
        if (std::find(names.begin(), names.end(), name) != names.end())
            throw std::invalid_argument("interval '" + name + "' given twice");
        IndexInterval range;
        try {
            range.first = std::stol(text.substr(eq + 1, colon - eq - 1));
            range.last = std::stol(text.substr(colon + 1));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("interval '" + text + "' has non-integer bounds");
        }
        names.push_back(name);
        intervals.push_back(range);
        interval_json[name] = {range.first, range.last};
    }
    std::vector<int> labels;
    for (const auto& p : c.pattern) {
        const auto it = std::find(names.begin(), names.end(), p);
        if (it == names.end()) throw std::invalid_argument("pattern refers to unknown interval '" + p + "'");
        labels.push_back(static_cast<int>(it - names.begin()));
    }
    const Rational value = mixed_character_moment(labels, intervals, c.n, flavor_of(c), GramOptions{c.allow_small_n});
    Artifact a;
    a.json = {{"n", c.n},           {"flavor", c.flavor},     {"intervals", interval_json},
              {"pattern", c.pattern}, {"value", value.str()}};
    std::string pattern;
    for (const auto& p : c.pattern) pattern += (pattern.empty() ? "" : " ") + p;
    a.header = {"n", "flavor", "pattern", "value"};
    a.rows.push_back({std::to_string(c.n), c.flavor, pattern, value.str()});
    return a;
}

Artifact asymptotic_cmd(const Config& c) {
    require_positive(c.k, "k");
    const auto result = asymptotic_moment(c.k, parse_t(c), flavor_of(c));
    Artifact a;
    a.json = {{"k", c.k},
              {"t", parse_t(c).str()},
              {"flavor", c.flavor},
              {"polynomial", to_json(result.polynomial)},
              {"value", result.value.str()}};
    a.header = {"k", "t", "flavor", "polynomial", "value"};
    a.rows.push_back({std::to_string(c.k), parse_t(c).str(), c.flavor, result.polynomial.str(), result.value.str()});
    return a;
}

Artifact bessel_classical_cmd(const Config& c) {
    const Rational t = parse_t(c);
    if (t.sign() <= 0) throw std::invalid_argument("--t must be positive");
    const int cut = c.order > 0 ? c.order : 40;
    const auto beta = classical_bessel(t.to_double(), cut, cut);
    Artifact a;
    a.json = to_json(beta);
    a.json["t"] = t.str();
    a.header = {"k", "weight"};
    for (const auto& [x, w] : beta.atoms()) a.rows.push_back({std::to_string(x), format_double(w)});
    return a;
}

ordered_json sequence_json(const std::vector<RationalPolynomial>& values) {
    ordered_json out = ordered_json::array();
    for (const auto& v : values) out.push_back(to_json(v));
    return out;
}

Artifact bessel_free_cmd(const Config& c) {
    const int order = c.order > 0 ? c.order : 12;
    const auto moments = free_bessel_moments(order);
    const auto cumulants = moments_to_free_cumulants(moments);
    Artifact a;
    a.json = {{"order", order}, {"moments", sequence_json(moments.values())}, {"cumulants", sequence_json(cumulants.values())}};
    a.header = {"m", "moment", "cumulant"};
    std::optional<Rational> t;
    if (!c.t.empty()) {
        t = parse_t(c);
        a.json["t"] = t->str();
        ordered_json values = ordered_json::array();
        for (const auto& m : moments.values()) values.push_back(m.evaluate(*t).str());
        a.json["values"] = values;
        a.header.push_back("value");
    }
    for (int m = 1; m <= order; ++m) {
        a.rows.push_back({std::to_string(m), moments.at(m).str(), cumulants.at(m).str()});
        if (t) a.rows.back().push_back(moments.at(m).evaluate(*t).str());
    }
    return a;
}

Artifact rtransform_cmd(const Config& c) {
    const int order = c.order > 0 ? c.order : 15;
    const FormalSeries r = r_transform(free_bessel_moments(order + 1), order);
    Artifact a;
    a.json = {{"order", order}, {"r", to_json(r)}};
    a.header = {"power", "coefficient"};
    for (int d = 0; d <= order; ++d) a.rows.push_back({std::to_string(d), r[d].str()});
    return a;
}

Artifact generating_cmd(const Config& c) {
    const int order = c.order > 0 ? c.order : 12;
    const auto report = free_bessel_generating(order);
    Artifact a;
    a.json = {{"order", order},
              {"g", to_json(report.g)},
              {"f", to_json(report.f)},
              {"cubic_residual_vanishes", report.cubic_residual_vanishes},
              {"moment_residual_vanishes", report.moment_residual_vanishes}};
    a.header = {"power", "g", "f"};
    for (int d = 0; d <= order; ++d) a.rows.push_back({std::to_string(d), report.g[d].str(), report.f[d].str()});
    return a;
}

void require_character_range(const Config& c) {
    require_positive(c.n, "n");
    if (c.s < 0 || c.s > c.n) throw std::invalid_argument("--s must lie in 0..n");
}

Artifact enumerate_hn_cmd(const Config& c) {
    require_character_range(c);
    const auto law = exact_character_law(static_cast<int>(c.n), static_cast<int>(c.s));
    Artifact a;
    ordered_json atoms = ordered_json::object();
    a.header = {"k", "weight"};
    for (const auto& [x, w] : law.atoms) {
        atoms[std::to_string(x)] = w.str();
        a.rows.push_back({std::to_string(x), w.str()});
    }
    a.json = {{"n", c.n}, {"s", c.s}, {"law", atoms}};
    return a;
}

Artifact sample_hn_cmd(const Config& c) {
    require_character_range(c);
    require_positive(static_cast<long>(c.samples), "samples");
    const int n = static_cast<int>(c.n);
    const int s = static_cast<int>(c.s);
    const auto estimate = sample_character_law(n, s, c.seed, c.samples);
    const auto empirical = estimate.empirical();
    AtomicMeasure reference;
    std::string reference_kind;
    if (n <= kMaxEnumerationDimension) {
        reference = exact_character_law(n, s).approximate();
        reference_kind = "exact";
    } else {
        reference = classical_bessel(static_cast<double>(s) / n, 40, 40);
        reference_kind = "bessel";
    }
    std::map<long, bool> support;
    for (const auto& [x, w] : empirical.atoms()) support[x] = true;
    for (const auto& [x, w] : reference.atoms()) support[x] = true;
    double max_dev = 0.0;
    ordered_json law = ordered_json::object();
    ordered_json ref = ordered_json::object();
    Artifact a;
    a.header = {"k", "empirical", "reference"};
    for (const auto& [x, unused] : support) {
        max_dev = std::max(max_dev, std::abs(empirical.weight(x) - reference.weight(x)));
        if (empirical.weight(x) > 0) law[std::to_string(x)] = empirical.weight(x);
        if (reference.weight(x) > 0) ref[std::to_string(x)] = reference.weight(x);
        a.rows.push_back({std::to_string(x), format_double(empirical.weight(x)), format_double(reference.weight(x))});
    }
    a.json = {{"n", c.n},       {"s", c.s},         {"N", c.samples},
              {"seed", c.seed}, {"law", law},       {"reference_kind", reference_kind},
              {"reference", ref}, {"max_abs_dev", max_dev}};
    return a;
}

Artifact hypercube_cmd(const Config& c) {
    require_positive(c.n, "n");
    const auto spectrum = spectrum_check(static_cast<int>(c.n));
    Artifact a;
    ordered_json multiplicities = ordered_json::object();
    a.header = {"eigenvalue", "multiplicity"};
    for (const auto& [lambda, mult] : spectrum.multiplicities) {
        multiplicities[std::to_string(lambda)] = mult;
        a.rows.push_back({std::to_string(lambda), std::to_string(mult)});
    }
    a.json = {{"n", c.n},
              {"vectors_checked", spectrum.vectors_checked},
              {"eigen_equations_hold", spectrum.eigen_equations_hold},
              {"multiplicities", multiplicities},
              {"multiplicities_binomial", spectrum.multiplicities_binomial},
              {"regular", spectrum.regular},
              {"bipartite", spectrum.bipartite}};
    if (c.n >= 2 && c.n <= kMaxDistanceAlgebraDimension) {
        const auto algebra = distance_algebra_check(static_cast<int>(c.n));
        a.json["distance_algebra"] = {{"coefficients", algebra.coefficients},
                                      {"expansions_exact", algebra.expansions_exact},
                                      {"coefficients_nonnegative", algebra.coefficients_nonnegative},
                                      {"triangular", algebra.triangular},
                                      {"classes_commute", algebra.classes_commute},
                                      {"spans_equal", algebra.spans_equal},
                                      {"distance_eigenvalues", algebra.distance_eigenvalues},
                                      {"distance_eigenvalues_distinct", algebra.distance_eigenvalues_distinct}};
    }
    return a;
}

Artifact verify_cmd(const Config& c) {
    verify::VerifyOptions options;
    const auto results = verify::run_acceptance(options, c.only);
    Artifact a;
    ordered_json list = ordered_json::array();
    bool all = true;
    a.header = {"id", "title", "passed", "detail"};
    for (const auto& r : results) {
        list.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        a.rows.push_back({std::to_string(r.id), r.title, r.passed ? "true" : "false", r.detail});
        all = all && r.passed;
    }
    a.json = {{"seed", options.seed}, {"passed", all}, {"criteria", list}};
    a.exit_code = all ? kSuccess : kVerificationFailed;
    return a;
}

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char ch : field) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

void write_csv(std::ostream& os, const Artifact& a) {
    auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t x = 0; x < fields.size(); ++x) os << (x ? "," : "") << csv_field(fields[x]);
        os << '\n';
    };
    line(a.header);
    for (const auto& row : a.rows) line(row);
}

void write_artifact(const Config& c, const Artifact& a, std::ostream& out) {
    std::ofstream file;
    if (!c.output.empty()) {
        file.open(c.output);
        if (!file) throw std::invalid_argument("cannot open output file '" + c.output + "'");
    }
    std::ostream& os = c.output.empty() ? out : file;
    if (c.format == "csv") {
        write_csv(os, a);
    } else {
        os << a.json.dump() << '\n';
    }
}

void write_error(std::ostream& os, const std::string& kind, const std::string& message) {
    const ordered_json error = {{"error", {{"type", kind}, {"message", message}}}};
    os << error.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integration and free probability over the hyperoctahedral quantum group", "hplus"};
    app.require_subcommand(1);
    Config c;

    auto flavor = [&](CLI::App* sub) {
        sub->add_option("--flavor", c.flavor, "o, h or s")->check(CLI::IsMember({"o", "h", "s"}))->capture_default_str();
    };
    auto small_n = [&](CLI::App* sub) {
        sub->add_flag("--allow-small-n", c.allow_small_n, "permit n < 4 (singular Gram matrices are reported)");
    };
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
        sub->add_option("--output", c.output, "write to this file instead of stdout");
    };

    std::map<CLI::App*, std::function<Artifact()>> handlers;
    auto command = [&](const std::string& name, const std::string& help, std::function<Artifact()> run) {
        CLI::App* sub = app.add_subcommand(name, help);
        common(sub);
        handlers[sub] = std::move(run);
        return sub;
    };

    auto* partitions = command("partitions", "list non-crossing partitions", [&] { return partitions_cmd(c); });
    flavor(partitions);
    partitions->add_option("--k", c.k, "number of points")->required();

    for (bool inverse : {false, true}) {
        auto* sub = command(inverse ? "weingarten" : "gram", inverse ? "Gram matrix and its inverse" : "Gram matrix",
                            [&c, inverse] { return gram_cmd(c, inverse); });
        flavor(sub);
        small_n(sub);
        sub->add_option("--k", c.k)->required();
        sub->add_option("--n", c.n)->required();
    }

    auto* integrate = command("integrate", "integral of u_{i1 j1} ... u_{ik jk}", [&] { return integrate_cmd(c); });
    flavor(integrate);
    small_n(integrate);
    integrate->add_option("--n", c.n)->required();
    integrate->add_option("--i", c.i, "row indices, comma separated")->delimiter(',')->required();
    integrate->add_option("--j", c.j, "column indices, comma separated")->delimiter(',')->required();

    auto* moment = command("moment", "k-th moment of the truncated character u_11 + ... + u_ss",
                           [&] { return moment_cmd(c); });
    flavor(moment);
    small_n(moment);
    moment->add_option("--k", c.k)->required();
    moment->add_option("--n", c.n)->required();
    moment->add_option("--s", c.s)->required();

    auto* mixed = command("mixed-moment", "moment of diagonal sums over disjoint intervals",
                          [&] { return mixed_moment_cmd(c); });
    flavor(mixed);
    small_n(mixed);
    mixed->add_option("--n", c.n)->required();
    mixed->add_option("--interval", c.intervals, "name=a:b, repeatable");
    mixed->add_option("--pattern", c.pattern, "interval names, comma separated")->delimiter(',');

    auto* asymptotic = command("asymptotic", "large-n limit of the truncated character moments",
                               [&] { return asymptotic_cmd(c); });
    flavor(asymptotic);
    asymptotic->add_option("--k", c.k)->required();
    asymptotic->add_option("--t", c.t, "p/q in (0,1]")->required();

    auto* classical = command("bessel-classical", "classical Bessel law", [&] { return bessel_classical_cmd(c); });
    classical->add_option("--t", c.t, "p/q")->required();
    classical->add_option("--order", c.order, "truncation of the support and of each series (default 40)");

    auto* free = command("bessel-free", "moments and free cumulants of the free Bessel law",
                         [&] { return bessel_free_cmd(c); });
    free->add_option("--order", c.order, "number of moments (default 12)");
    free->add_option("--t", c.t, "also evaluate the moments at this p/q");

    auto* rtransform = command("rtransform", "R-transform of the free Bessel law", [&] { return rtransform_cmd(c); });
    rtransform->add_option("--order", c.order, "highest power of z (default 15)");

    auto* generating = command("generating", "moment generating series and their algebraic equations",
                               [&] { return generating_cmd(c); });
    generating->add_option("--order", c.order, "truncation order (default 12)");

    auto* enumerate = command("enumerate-hn", "exact law of the truncated character on H_n",
                              [&] { return enumerate_hn_cmd(c); });
    enumerate->add_option("--n", c.n)->required();
    enumerate->add_option("--s", c.s)->required();

    auto* sample = command("sample-hn", "Monte Carlo law of the truncated character on H_n",
                           [&] { return sample_hn_cmd(c); });
    sample->add_option("--n", c.n)->required();
    sample->add_option("--s", c.s)->required();
    sample->add_option("--seed", c.seed)->capture_default_str();
    sample->add_option("--samples", c.samples)->capture_default_str();

    auto* cube = command("hypercube", "spectrum and distance algebra of the n-cube", [&] { return hypercube_cmd(c); });
    cube->add_option("--n", c.n)->required();

    auto* verify = command("verify", "run the acceptance suite", [&] { return verify_cmd(c); });
    verify->add_option("--only", c.only, "criterion ids, comma separated")->delimiter(',');

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        for (const auto& [sub, run] : handlers) {
            if (sub->parsed()) {
                const Artifact a = run();
                write_artifact(c, a, out);
                return a.exit_code;
            }
        }
    } catch (const SingularGramError& e) {
        write_error(out, "singular_gram", e.what());
        return kComputationalError;
    } catch (const std::invalid_argument& e) {
        err << "hplus: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        write_error(out, "computation", e.what());
        return kComputationalError;
    }
    return kUsageError;
}

}  // namespace hplus::cli
