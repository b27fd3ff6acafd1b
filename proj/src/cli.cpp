#include "saxl/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "saxl/bigint.hpp"
#include "saxl/cache.hpp"
#include "saxl/character.hpp"
#include "saxl/config.hpp"
#include "saxl/counting.hpp"
#include "saxl/kronecker.hpp"
#include "saxl/saxlcert.hpp"
#include "saxl/stats.hpp"

namespace saxl {

namespace {

using ojson = nlohmann::ordered_json;

int parse_int_strict(const std::string& text, const char* what) {
    int v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size())
        throw std::invalid_argument(std::string("cannot parse ") + what + " from \"" +
                                    text + "\"");
    return v;
}

// Reduced fraction with a decimal rendering alongside the exact strings.
ojson fraction_json(Int num, Int den) {
    internal_check(den > 0, "fraction: nonpositive denominator");
    Int g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    ojson j;
    j["numerator"] = to_decimal(num);
    j["denominator"] = to_decimal(den);
    j["decimal"] = num.convert_to<double>() / den.convert_to<double>();
    return j;
}

ojson partition_strings(const std::vector<Partition>& ps) {
    ojson arr = ojson::array();
    for (const auto& p : ps) arr.push_back(p.to_string());
    return arr;
}

void emit_json(const ojson& j, std::ostream& out) { out << j.dump(2) << "\n"; }

// Generic TSV rendering: one key<TAB>value line per top-level field,
// flattening one level of nesting and joining scalar arrays with commas.
void emit_tsv_scalars(const ojson& j, std::ostream& out) {
    auto scalar = [](const ojson& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            for (const auto& [k2, v2] : value.items())
                out << key << "." << k2 << "\t" << scalar(v2) << "\n";
        } else if (value.is_array()) {
            std::string joined;
            for (const auto& v2 : value) {
                if (!joined.empty()) joined += ",";
                joined += scalar(v2);
            }
            out << key << "\t" << joined << "\n";
        } else {
            out << key << "\t" << scalar(value) << "\n";
        }
    }
}

int usage_error(std::ostream& err, const std::string& msg) {
    err << "usage error: " << msg << "\n";
    return 2;
}

std::vector<int> parse_int_list(const std::string& text_in) {
    std::string text = text_in;
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']')
        text = text.substr(1, text.size() - 2);
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in list \"" + text + "\"");
        out.push_back(parse_int_strict(item, "list entry"));
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

ExperimentMode mode_from_name(const std::string& name) {
    if (name == "plain") return ExperimentMode::PlainClass;
    if (name == "selfconj") return ExperimentMode::SelfConjugateHooks;
    throw std::invalid_argument("unknown mode \"" + name + "\" (plain|selfconj)");
}

}  // namespace

Partition parse_shape_argument(const std::string& text) {
    std::string s = text;
    bool hooks = false;
    if (!s.empty() && s.back() == '^') {
        hooks = true;
        s.pop_back();
    }
    Partition p = [&] {
        const auto colon = s.find(':');
        if (colon == std::string::npos) return parse_partition(s);
        Family f = family_from_name(s.substr(0, colon));
        int k = parse_int_strict(s.substr(colon + 1), "family index k");
        return family_shape(f, k);
    }();
    return hooks ? principal_hooks(p).as_partition() : p;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"saxl-lab: exact characters, Kronecker coefficients, and\n"
                 "tensor-square verification for the symmetric group"};
    app.name("saxl-lab");
    app.require_subcommand(1);

    std::string opt_config, opt_format, opt_cache_dir;
    int opt_workers = 0;
    long long opt_memory = 0, opt_cells = 0;
    unsigned long long opt_seed = 0;
    app.add_option("--config", opt_config, "JSON config file (default: ./saxl-lab.json)");
    app.add_option("--workers", opt_workers, "worker threads, 0 = one per hardware thread");
    app.add_option("--format", opt_format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--cache-dir", opt_cache_dir, "character-table cache directory");
    app.add_option("--memory-budget", opt_memory, "table memory budget in MB");
    app.add_option("--cell-budget", opt_cells, "cell budget for full spectra");
    app.add_option("--seed", opt_seed, "RNG seed for sampling commands");

    auto* sub_char = app.add_subcommand("char", "character of a shape at a class");
    std::string char_lambda, char_nu;
    sub_char->add_option("lambda", char_lambda, "shape, e.g. [5,1] or staircase:4")
        ->required();
    sub_char->add_option("nu", char_nu, "class, e.g. [5,1] or caret:2^")->required();

    auto* sub_table = app.add_subcommand("table", "full character table (cached on disk)");
    long long table_n = 0;
    sub_table->add_option("n", table_n, "size of the symmetric group")->required();

    auto* sub_kron = app.add_subcommand("kron", "Kronecker coefficient g(lambda, mu, nu)");
    std::string kron_lambda, kron_mu, kron_nu;
    sub_kron->add_option("lambda", kron_lambda, "first shape")->required();
    sub_kron->add_option("mu", kron_mu, "second shape")->required();
    sub_kron->add_option("nu", kron_nu, "third shape")->required();

    auto* sub_phi = app.add_subcommand("phi", "tensor-square spectrum of a shape");
    std::string phi_mu;
    sub_phi->add_option("mu", phi_mu, "shape whose tensor square to expand")->required();

    auto* sub_certify =
        app.add_subcommand("certify", "nonzero-character certificate at the hook class");
    std::string certify_first, certify_second;
    bool certify_all_flag = false;
    sub_certify->add_option("lambda", certify_first, "shape to certify (mu when --all)");
    sub_certify->add_option("mu", certify_second, "self-conjugate shape");
    sub_certify->add_flag("--all", certify_all_flag, "certify every shape of the same size");

    auto* sub_saxl = app.add_subcommand("saxl", "verify the tensor-square conjecture");
    std::string saxl_family;
    int saxl_k = 0;
    bool saxl_exact = false;
    sub_saxl->add_option("--family", saxl_family, "shape family")
        ->required()
        ->check(CLI::IsMember({"staircase", "chopped", "caret"}));
    sub_saxl->add_option("--k", saxl_k, "family index")->required();
    sub_saxl->add_flag("--exact", saxl_exact,
                       "compute the full spectrum instead of certificates only");

    auto* sub_counts = app.add_subcommand("counts", "partition-counting tables");
    std::string counts_kind;
    long long counts_limit = -1;
    int counts_k = 0, counts_a = 0, counts_m = 0;
    std::string counts_set;
    bool counts_threshold = false;
    sub_counts->add_option("kind", counts_kind, "which series")
        ->required()
        ->check(CLI::IsMember({"pi", "pik", "pprime"}));
    sub_counts->add_option("--limit", counts_limit, "largest index to tabulate");
    sub_counts->add_option("--k", counts_k, "colors (pik)");
    sub_counts->add_option("--a", counts_a, "progression start (pprime)");
    sub_counts->add_option("--m", counts_m, "progression step (pprime)");
    sub_counts->add_option("--set", counts_set, "finite part set, e.g. 5,9,13 or [5,9,13] (pprime)");
    sub_counts->add_flag("--threshold", counts_threshold,
                         "report the terminal monotonicity threshold (finite sets)");

    auto* sub_stats = app.add_subcommand("stats", "character-table statistics");
    std::string stats_kind, stats_mode = "plain";
    long long stats_n = 0, stats_trials = 10000;
    int stats_k = 0;
    sub_stats->add_option("kind", stats_kind, "which report")
        ->required()
        ->check(CLI::IsMember({"zeros", "caret", "random"}));
    sub_stats->add_option("--n", stats_n, "size of the symmetric group");
    sub_stats->add_option("--k", stats_k, "caret family index");
    sub_stats->add_option("--trials", stats_trials, "number of random samples");
    sub_stats->add_option("--mode", stats_mode, "sampling mode")
        ->check(CLI::IsMember({"plain", "selfconj"}));

    auto* sub_families = app.add_subcommand("families", "the named self-conjugate shapes");
    int families_k = 0;
    std::string families_family;
    bool families_exp = false, families_vanishing = false;
    sub_families->add_option("--k", families_k, "family index")->required();
    sub_families->add_option("--family", families_family, "restrict to one family")
        ->check(CLI::IsMember({"staircase", "chopped", "caret"}));
    sub_families->add_flag("--exp", families_exp,
                           "list the exponential certified family");
    sub_families->add_flag("--vanishing", families_vanishing,
                           "list the exponential vanishing family");

    for (auto* sub : {sub_char, sub_table, sub_kron, sub_phi, sub_certify, sub_saxl,
                      sub_counts, sub_stats, sub_families})
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg;
        if (!opt_config.empty()) {
            cfg = RunConfig::load(opt_config);
            if (const char* dir = std::getenv("SAXL_LAB_CACHE_DIR"); dir && *dir)
                cfg.cache_dir = dir;
        } else {
            cfg = RunConfig::discover();
        }
        if (app.count("--workers")) cfg.workers = opt_workers;
        if (app.count("--format")) cfg.format = opt_format;
        if (app.count("--cache-dir")) cfg.cache_dir = opt_cache_dir;
        if (app.count("--memory-budget")) cfg.memory_budget_mb = opt_memory;
        if (app.count("--cell-budget")) cfg.cell_budget = opt_cells;
        if (app.count("--seed")) cfg.seed = opt_seed;
        cfg.validate();
        const bool tsv = cfg.format == "tsv";

        if (sub_char->parsed()) {
            const Partition lambda = parse_shape_argument(char_lambda);
            const Partition nu = parse_shape_argument(char_nu);
            ojson j;
            j["command"] = "char";
            j["lambda"] = lambda.to_string();
            j["nu"] = nu.to_string();
            j["n"] = lambda.n();
            j["value"] = to_decimal(mn_char(lambda, nu));
            tsv ? emit_tsv_scalars(j, out) : emit_json(j, out);
            return 0;
        }

        if (sub_table->parsed()) {
            const CharTable table = load_or_build_table(table_n, cfg, err);
            if (tsv) {
                out << "lambda\tnu\tvalue\n";
                for (size_t r = 0; r < table.shapes.size(); ++r)
                    for (size_t c = 0; c < table.shapes.size(); ++c)
                        out << table.shapes[r].to_string() << "\t"
                            << table.shapes[c].to_string() << "\t"
                            << to_decimal(table.values[r][c]) << "\n";
                return 0;
            }
            ojson j;
            j["command"] = "table";
            j["n"] = table.n;
            j["order"] = "lex-decreasing";
            j["shapes"] = partition_strings(table.shapes);
            ojson rows = ojson::array();
            for (const auto& row : table.values) {
                ojson r = ojson::array();
                for (const auto& v : row) r.push_back(to_decimal(v));
                rows.push_back(std::move(r));
            }
            j["values"] = std::move(rows);
            emit_json(j, out);
            return 0;
        }

        if (sub_kron->parsed()) {
            const Partition lambda = parse_shape_argument(kron_lambda);
            const Partition mu = parse_shape_argument(kron_mu);
            const Partition nu = parse_shape_argument(kron_nu);
            ojson j;
            j["command"] = "kron";
            j["lambda"] = lambda.to_string();
            j["mu"] = mu.to_string();
            j["nu"] = nu.to_string();
            j["n"] = lambda.n();
            j["value"] = to_decimal(kron_g(lambda, mu, nu));
            tsv ? emit_tsv_scalars(j, out) : emit_json(j, out);
            return 0;
        }

        if (sub_phi->parsed()) {
            const Partition mu = parse_shape_argument(phi_mu);
            const Int classes = pi_table(mu.n()).values[(size_t)mu.n()];
            if (classes * classes > cfg.cell_budget)
                throw BudgetExceeded("spectrum at n = " + std::to_string(mu.n()) +
                                     " needs " + to_decimal(classes * classes) +
                                     " cells; the budget is " +
                                     std::to_string(cfg.cell_budget));
            const TensorSquareSpectrum spec = tensor_square(mu, cfg.workers);
            if (tsv) {
                out << "shape\tmultiplicity\n";
                for (size_t i = 0; i < spec.shapes.size(); ++i)
                    if (spec.mult[i] != 0)
                        out << spec.shapes[i].to_string() << "\t"
                            << to_decimal(spec.mult[i]) << "\n";
                return 0;
            }
            ojson j;
            j["command"] = "phi";
            j["mu"] = mu.to_string();
            j["n"] = mu.n();
            j["shapes_total"] = (long long)spec.shapes.size();
            const auto support = spec.support();
            j["support_size"] = (long long)support.size();
            j["full_support"] = spec.full_support();
            ojson map = ojson::object();
            for (size_t i = 0; i < spec.shapes.size(); ++i)
                if (spec.mult[i] != 0)
                    map[spec.shapes[i].to_string()] = to_decimal(spec.mult[i]);
            j["spectrum"] = std::move(map);
            emit_json(j, out);
            return 0;
        }

        if (sub_certify->parsed()) {
            if (certify_all_flag) {
                if (certify_first.empty() || !certify_second.empty())
                    return usage_error(err, "certify --all takes exactly one shape (mu)");
                const Partition mu = parse_shape_argument(certify_first);
                const auto certified = certified_phi(mu);
                ojson j;
                j["command"] = "certify";
                j["mu"] = mu.to_string();
                j["n"] = mu.n();
                j["all"] = true;
                j["hook_class"] = principal_hooks(mu).as_partition().to_string();
                j["total"] = to_decimal(pi_table(mu.n()).values[(size_t)mu.n()]);
                j["certified_count"] = (long long)certified.size();
                j["certified"] = partition_strings(certified);
                tsv ? emit_tsv_scalars(j, out) : emit_json(j, out);
                return 0;
            }
            if (certify_first.empty() || certify_second.empty())
                return usage_error(err, "certify takes lambda and mu (or --all mu)");
            const Partition lambda = parse_shape_argument(certify_first);
            const Partition mu = parse_shape_argument(certify_second);
            const Certificate cert = certify(lambda, mu);
            ojson j;
            j["command"] = "certify";
            j["lambda"] = cert.lambda.to_string();
            j["mu"] = cert.mu.to_string();
            j["n"] = cert.mu.n();
            j["all"] = false;
            j["hook_class"] = cert.hook_class.as_partition().to_string();
            j["value"] = to_decimal(cert.value);
            j["certified"] = cert.certified;
            tsv ? emit_tsv_scalars(j, out) : emit_json(j, out);
            return 0;
        }

        if (sub_saxl->parsed()) {
            const Family family = family_from_name(saxl_family);
            const VerificationReport rep = verify_conjecture(family, saxl_k, saxl_exact, cfg);
            err << "saxl: " << family_name(rep.family) << " k=" << rep.k << " finished in "
                << rep.seconds << " s\n";
            ojson j;
            j["command"] = "saxl";
            j["family"] = family_name(rep.family);
            j["k"] = rep.k;
            j["n"] = rep.n;
            j["mode"] = rep.exact_mode ? "exact" : "certificate";
            j["total"] = rep.total;
            j["certified"] = rep.certified;
            j["rule_covered"] = rep.rule_covered;
            j["exact_checked"] = rep.exact_checked;
            j["inconclusive"] = partition_strings(rep.inconclusive);
            j["missing"] = partition_strings(rep.missing);
            j["conjecture_holds"] = rep.conjecture_holds;
            tsv ? emit_tsv_scalars(j, out) : emit_json(j, out);
            return 0;
        }

        if (sub_counts->parsed()) {
            CountTable table;
            ojson j;
            j["command"] = "counts";
            j["kind"] = counts_kind;
            std::optional<long long> threshold;
            bool with_threshold = false;
            if (counts_kind == "pi") {
                if (counts_limit < 0) return usage_error(err, "counts pi needs --limit");
                table = pi_table(counts_limit);
                j["limit"] = counts_limit;
            } else if (counts_kind == "pik") {
                if (counts_limit < 0) return usage_error(err, "counts pik needs --limit");
                if (!sub_counts->count("--k"))
                    return usage_error(err, "counts pik needs --k");
                table = pi_k_table(counts_k, counts_limit);
                j["k"] = counts_k;
                j["limit"] = counts_limit;
            } else {
                const bool progression = sub_counts->count("--a") || sub_counts->count("--m");
                const bool finite = sub_counts->count("--set") != 0;
                if (progression == finite)
                    return usage_error(err,
                                       "counts pprime needs either --a/--m or --set");
                if (counts_threshold && !finite)
                    return usage_error(err, "--threshold applies to finite sets only");
                if (finite) {
                    const std::vector<int> R = parse_int_list(counts_set);
                    table = pi_prime_set_table(R);
                    j["set"] = table.set;
                    j["limit"] = table.limit();
                    if (counts_threshold) {
                        threshold = monotonicity_threshold(table.set);
                        with_threshold = true;
                    }
                } else {
                    if (!sub_counts->count("--a") || !sub_counts->count("--m"))
                        return usage_error(err, "counts pprime needs both --a and --m");
                    if (counts_limit < 0)
                        return usage_error(err, "counts pprime needs --limit");
                    table = pi_prime_table(ProgressionSpec(counts_a, counts_m), counts_limit);
                    j["a"] = counts_a;
                    j["m"] = counts_m;
                    j["limit"] = counts_limit;
                }
            }
            ojson vals = ojson::array();
            for (const auto& v : table.values) vals.push_back(to_decimal(v));
            j["values"] = std::move(vals);
            if (with_threshold)
                j["threshold"] = threshold ? ojson(*threshold) : ojson(nullptr);
            if (tsv) {
                out << "index\tvalue\n";
                for (size_t i = 0; i < table.values.size(); ++i)
                    out << i << "\t" << to_decimal(table.values[i]) << "\n";
                if (with_threshold)
                    out << "threshold\t" << (threshold ? std::to_string(*threshold) : "none")
                        << "\n";
                return 0;
            }
            emit_json(j, out);
            return 0;
        }

        if (sub_stats->parsed()) {
            ojson j;
            j["command"] = "stats";
            j["kind"] = stats_kind;
            if (stats_kind == "zeros") {
                if (!sub_stats->count("--n")) return usage_error(err, "stats zeros needs --n");
                const ZeroDensityReport rep =
                    zero_density_from_table(load_or_build_table(stats_n, cfg, err));
                j["n"] = rep.n;
                j["entries"] = to_decimal(rep.total);
                j["zeros"] = to_decimal(rep.zeros);
                j["ones"] = to_decimal(rep.ones);
                j["p"] = fraction_json(rep.zeros, rep.total);
                j["q"] = fraction_json(rep.ones, rep.total);
            } else if (stats_kind == "caret") {
                if (!sub_stats->count("--k")) return usage_error(err, "stats caret needs --k");
                const CaretVanishingReport rep = caret_vanishing_fraction(stats_k);
                j["k"] = rep.k;
                j["n"] = rep.n;
                j["total"] = to_decimal(rep.total);
                j["zeros"] = to_decimal(rep.zeros);
                j["zero_fraction"] = fraction_json(rep.zeros, rep.total);
                j["nonempty_core"] = to_decimal(rep.nonempty_core);
                j["nonempty_core_fraction"] = fraction_json(rep.nonempty_core, rep.total);
                j["empty_core_count"] = to_decimal(rep.empty_core_count);
            } else {
                if (!sub_stats->count("--n"))
                    return usage_error(err, "stats random needs --n");
                const ExperimentReport rep = random_char_experiment(
                    stats_n, stats_trials, mode_from_name(stats_mode), cfg.seed);
                j["n"] = rep.n;
                j["trials"] = rep.trials;
                j["mode"] = stats_mode;
                j["seed"] = rep.seed;
                j["rng"] = rep.rng;
                j["zeros"] = rep.zeros;
                j["estimate"] = rep.estimate;
                j["wilson_low"] = rep.wilson_low;
                j["wilson_high"] = rep.wilson_high;
            }
            tsv ? emit_tsv_scalars(j, out) : emit_json(j, out);
            return 0;
        }

        if (sub_families->parsed()) {
            if ((families_exp || families_vanishing) && families_family.empty())
                return usage_error(err, "--exp/--vanishing need --family");
            std::vector<Family> which;
            if (!families_family.empty())
                which.push_back(family_from_name(families_family));
            else
                which = {Family::Staircase, Family::ChoppedSquare, Family::Caret};
            ojson j;
            j["command"] = "families";
            j["k"] = families_k;
            ojson list = ojson::array();
            for (Family f : which) {
                const Partition shape = family_shape(f, families_k);
                ojson entry;
                entry["family"] = family_name(f);
                entry["shape"] = shape.to_string();
                entry["n"] = shape.n();
                entry["hooks"] = principal_hooks(shape).as_partition().to_string();
                entry["self_conjugate"] = is_self_conjugate(shape);
                if (families_exp) {
                    const auto members = exp_family(f, families_k);
                    entry["exp_count"] = (long long)members.size();
                    entry["exp_members"] = partition_strings(members);
                }
                if (families_vanishing) {
                    const auto weights = vanishing_weights(f, families_k);
                    const auto members = vanishing_family(f, families_k);
                    entry["vanishing_weights"] = weights;
                    entry["vanishing_count"] = (long long)members.size();
                    entry["vanishing_members"] = partition_strings(members);
                }
                list.push_back(std::move(entry));
            }
            j["families"] = std::move(list);
            if (tsv) {
                for (const auto& entry : j["families"]) {
                    emit_tsv_scalars(entry, out);
                    out << "\n";
                }
                return 0;
            }
            emit_json(j, out);
            return 0;
        }

        return usage_error(err, "no subcommand given");
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace saxl
