#include <dyckchains/commands.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <dyckchains/chain_formula.hpp>
#include <dyckchains/errors.hpp>
#include <dyckchains/generating.hpp>
#include <dyckchains/indices.hpp>
#include <dyckchains/lattice.hpp>
#include <dyckchains/shapes.hpp>

namespace dyck {

std::optional<Route> parse_route(std::string_view name) {
    if (name == "bruteforce") {
        return Route::bruteforce;
    }
    if (name == "formula") {
        return Route::formula;
    }
    if (name == "series") {
        return Route::series;
    }
    if (name == "closedform") {
        return Route::closedform;
    }
    return std::nullopt;
}

std::string route_name(Route route) {
    switch (route) {
    case Route::bruteforce:
        return "bruteforce";
    case Route::formula:
        return "formula";
    case Route::series:
        return "series";
    case Route::closedform:
        return "closedform";
    }
    return "?";
}

std::vector<Route> available_routes(int h) {
    if (h == 2 || h == 3) {
        return {Route::bruteforce, Route::formula, Route::series, Route::closedform};
    }
    return {Route::bruteforce, Route::formula};
}

bool ChainCountReport::all_agree() const {
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.agree; });
}

namespace {

void require_cap(int n, int cap, const std::string& what) {
    if (n > cap) {
        throw ResourceLimitError(what + ": n-max " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
}

std::vector<mpz_class> series_route(int h, int n_max) {
    const int order = std::max(n_max, 1);
    auto values = (h == 2 ? series::series_SC2(order) : series::series_SC3(order)).integers();
    values.resize(static_cast<std::size_t>(n_max + 1));
    return values;
}

} // namespace

ChainCountReport build_report(int h, int n_max, const std::vector<Route>& routes, const RunConfig& config) {
    if (h < 0 || n_max < 0) {
        throw std::invalid_argument("h and n-max must be nonnegative");
    }
    if (routes.empty()) {
        throw std::invalid_argument("no routes selected");
    }
    const auto available = available_routes(h);
    for (Route r : routes) {
        if (std::find(available.begin(), available.end(), r) == available.end()) {
            throw std::invalid_argument("route '" + route_name(r) + "' does not exist for h = " + std::to_string(h));
        }
    }

    ChainCountReport report;
    report.h = h;
    report.routes = routes;
    report.rows.resize(static_cast<std::size_t>(n_max + 1));
    for (int n = 0; n <= n_max; ++n) {
        report.rows[static_cast<std::size_t>(n)].n = n;
    }

    for (Route route : routes) {
        std::vector<mpz_class> values(static_cast<std::size_t>(n_max + 1));
        switch (route) {
        case Route::bruteforce:
            require_cap(n_max, config.limits.max_n, "bruteforce");
            for (int n = 0; n <= n_max; ++n) {
                values[static_cast<std::size_t>(n)] = count_saturated_chains(n, h, config.limits, config.exec);
            }
            break;
        case Route::formula: {
            require_cap(n_max, config.limits.max_n, "formula");
            const ChainFormula formula(h, config.limits);
            for (int n = 0; n <= n_max; ++n) {
                values[static_cast<std::size_t>(n)] = formula.total(n, config.exec);
            }
            break;
        }
        case Route::series:
            require_cap(n_max, config.max_series_n, "series");
            values = series_route(h, n_max);
            break;
        case Route::closedform:
            require_cap(n_max, kMaxClosedFormN, "closedform");
            for (int n = 0; n <= n_max; ++n) {
                const auto un = static_cast<unsigned long>(n);
                values[static_cast<std::size_t>(n)] = h == 2 ? sc2_closed(un) : sc3_closed(un);
            }
            break;
        }
        for (int n = 0; n <= n_max; ++n) {
            report.rows[static_cast<std::size_t>(n)].values[route] = values[static_cast<std::size_t>(n)];
        }
    }

    for (auto& row : report.rows) {
        const mpz_class& first = row.values.begin()->second;
        row.agree = std::all_of(row.values.begin(), row.values.end(), [&](const auto& kv) { return kv.second == first; });
    }
    return report;
}

void render_report(std::ostream& out, const ChainCountReport& report, OutputFormat format) {
    if (format == OutputFormat::csv) {
        out << "n";
        for (Route r : report.routes) {
            out << ',' << route_name(r);
        }
        out << ",agree\n";
        for (const auto& row : report.rows) {
            out << row.n;
            for (Route r : report.routes) {
                out << ',' << row.values.at(r).get_str();
            }
            out << ',' << (row.agree ? "true" : "false") << '\n';
        }
        return;
    }
    out << "# h=" << report.h << " routes=";
    for (std::size_t i = 0; i < report.routes.size(); ++i) {
        out << (i ? "," : "") << route_name(report.routes[i]);
    }
    out << '\n';
    for (const auto& row : report.rows) {
        out << "n=" << row.n;
        for (Route r : report.routes) {
            out << ' ' << route_name(r) << '=' << row.values.at(r).get_str();
        }
        out << (row.agree ? " agree" : " MISMATCH") << '\n';
    }
}

std::vector<mpz_class> sequence_values(std::string_view stat, const RunConfig& config) {
    if (config.n_max < 0) {
        throw std::invalid_argument("n-max must be nonnegative");
    }
    const int n_max = config.n_max;
    std::vector<mpz_class> values;
    values.reserve(static_cast<std::size_t>(n_max + 1));
    if (stat == "sc2" || stat == "sc3" || stat == "catalan") {
        require_cap(n_max, kMaxClosedFormN, std::string(stat));
        for (int n = 0; n <= n_max; ++n) {
            const auto un = static_cast<unsigned long>(n);
            values.push_back(stat == "sc2" ? sc2_closed(un) : stat == "sc3" ? sc3_closed(un) : catalan(un));
        }
    } else if (stat == "edges") {
        require_cap(n_max, config.limits.max_n, "edges");
        for (int n = 0; n <= n_max; ++n) {
            values.push_back(count_saturated_chains(n, 1, config.limits, config.exec));
        }
    } else if (stat == "valley-abscissae") {
        require_cap(n_max, config.limits.max_n, "valley-abscissae");
        for (int n = 0; n <= n_max; ++n) {
            values.push_back(valley_abscissae_sum(n, config.limits, config.exec));
        }
    } else {
        throw std::invalid_argument("unknown statistic '" + std::string(stat) + "'");
    }
    return values;
}

namespace {

std::string decimal(const mpq_class& q) {
    std::ostringstream s;
    s << std::setprecision(12) << q.get_d();
    return s.str();
}

void write_index_table(std::ostream& out, int h, const RunConfig& config) {
    const bool closed = h == 2 || h == 3;
    if (h < 1) {
        throw std::invalid_argument("index: h must be positive");
    }
    require_cap(config.n_max, closed ? kMaxClosedFormN : config.limits.max_n, "index");
    const bool csv = config.format == OutputFormat::csv;
    out << (csv ? "" : "# ") << "n,sc_" << h << ",size,index,index_decimal,boolean_target,ratio\n";
    for (int n = 0; n <= config.n_max; ++n) {
        const auto un = static_cast<unsigned long>(n);
        const mpz_class chains = closed ? (h == 2 ? sc2_closed(un) : sc3_closed(un))
                                        : count_saturated_chains(n, h, config.limits, config.exec);
        const mpz_class size = catalan(un);
        const mpq_class index = hasse_index(chains, size);
        mpz_class num;
        mpz_ui_pow_ui(num.get_mpz_t(), un, static_cast<unsigned long>(h));
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(h));
        mpq_class target(num, den);
        target.canonicalize();
        const std::string ratio = sgn(target) == 0 ? std::string("NA") : mpq_class(index / target).get_str();
        out << n << ',' << chains.get_str() << ',' << size.get_str() << ',' << index.get_str() << ','
            << decimal(index) << ',' << target.get_str() << ',' << ratio << '\n';
    }
}

void write_shapes(std::ostream& out, int area, const RunConfig& config) {
    const auto shapes = enumerate_skfs(area, config.limits);
    if (config.format == OutputFormat::csv) {
        out << "area,lower,upper,tableau_count\n";
    }
    for (const auto& s : shapes) {
        const std::string t = tableau_count(s, config.limits).get_str();
        if (config.format == OutputFormat::csv) {
            out << s.area() << ',' << s.lower() << ',' << s.upper() << ',' << t << '\n';
        } else {
            out << s.to_string() << ' ' << t << '\n';
        }
    }
}

void write_series(std::ostream& out, const std::string& name, const RunConfig& config) {
    using namespace series;
    const int order = config.order;
    if (order < 1) {
        throw std::invalid_argument("series order must be >= 1");
    }
    require_cap(order, config.max_series_n, "series");
    if (name != "SC2" && name != "SC3") {
        require_cap(order, kMaxExactDumpOrder, "series " + name);
    }
    Series s;
    if (name == "SC2") {
        s = series_SC2(order);
    } else if (name == "SC3") {
        s = series_SC3(order);
    } else if (name == "V") {
        s = series_V(order);
    } else if (name == "F2") {
        s = solve_system_2(order).F;
    } else if (name == "F3") {
        s = solve_system_3(order).F;
    } else if (name == "A") {
        s = solve_A(order);
    } else if (name == "B") {
        s = solve_B(order);
    } else if (name == "C") {
        s = solve_C(order);
    } else {
        throw std::invalid_argument("unknown series '" + name + "' (expected SC2, SC3, V, F2, F3, A, B, C)");
    }
    out << s.dump();
}

// "key=value" lines; '#' starts a comment.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const auto eq = line.find('=');
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (eq == std::string::npos) {
            if (!trim(line).empty()) {
                throw std::invalid_argument("config line without '=': " + line);
            }
            continue;
        }
        entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return entries;
}

// Config values become options placed before the user's own, so flags win.
std::vector<std::string> apply_config(std::vector<std::string> args) {
    std::optional<std::string> path;
    for (std::size_t i = 0; i < args.size();) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    if (!path) {
        return args;
    }
    const auto sub = std::find_if(args.begin(), args.end(), [](const std::string& a) { return !a.empty() && a[0] != '-'; });
    if (sub == args.end()) {
        return args;
    }
    std::vector<std::string> injected;
    for (const auto& [key, value] : read_config(*path)) {
        if (key == "serial") {
            if (value == "true" || value == "1") {
                injected.push_back("--serial");
            }
            continue;
        }
        injected.push_back("--" + key);
        injected.push_back(value);
    }
    args.insert(sub + 1, injected.begin(), injected.end());
    return args;
}

} // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    try {
        args = apply_config(raw_args);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    CLI::App app{"Saturated chains in Dyck lattices: enumeration, cross-verification, series and indices", "dyckchains"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    app.allow_config_extras(false);
    std::string unused_config;
    app.add_option("--config", unused_config, "key=value file; command-line flags override it");

    RunConfig cfg;
    std::string format = "plain";
    bool serial = false;
    auto add_caps = [&](CLI::App* sub) {
        sub->add_option("--max-exhaustive", cfg.limits.max_n, "cap on n for exhaustive routes")->capture_default_str();
        sub->add_flag("--serial", serial, "use the serial reference kernels");
    };

    auto* seq = app.add_subcommand("seq", "emit a(0..n-max) of a statistic");
    std::string stat;
    seq->add_option("stat", stat, "sc2 | sc3 | catalan | edges | valley-abscissae")->required();
    seq->add_option("--n-max", cfg.n_max)->capture_default_str();
    seq->add_option("--format", format, "plain | csv | bfile")->capture_default_str();
    add_caps(seq);

    auto* verify = app.add_subcommand("verify", "cross-check sc_h across computation routes");
    std::string routes = "all";
    verify->add_option("--h", cfg.h)->capture_default_str();
    verify->add_option("--n-max", cfg.n_max)->capture_default_str();
    verify->add_option("--routes", routes, "comma list of bruteforce,formula,series,closedform or 'all'")
        ->capture_default_str();
    verify->add_option("--format", format, "plain | csv")->capture_default_str();
    verify->add_option("--max-h", cfg.limits.max_h, "cap on h for the formula route")->capture_default_str();
    verify->add_option("--max-series", cfg.max_series_n, "cap on n for the series route")->capture_default_str();
    add_caps(verify);

    auto* shapes = app.add_subcommand("shapes", "list skew shapes of an area with tableau counts");
    int area = 1;
    shapes->add_option("--area", area)->required();
    shapes->add_option("--format", format, "plain | csv")->capture_default_str();
    shapes->add_option("--max-area", cfg.limits.max_area)->capture_default_str();

    auto* chains = app.add_subcommand("chains", "saturated chains of length h starting at a path");
    std::string path_word;
    std::string chain_route = "bruteforce";
    chains->add_option("--path", path_word, "Dyck word over {u,d}")->required();
    chains->add_option("--h", cfg.h)->capture_default_str();
    chains->add_option("--route", chain_route, "bruteforce | formula")->capture_default_str();
    chains->add_option("--max-h", cfg.limits.max_h)->capture_default_str();

    auto* lattice = app.add_subcommand("lattice", "export the Hasse diagram of D_n");
    int lattice_n = 3;
    lattice->add_option("--n", lattice_n)->capture_default_str();
    lattice->add_option("--format", format, "dot | edges")->capture_default_str();
    add_caps(lattice);

    auto* index = app.add_subcommand("index", "Hasse index table of order h");
    index->add_option("--h", cfg.h)->capture_default_str();
    index->add_option("--n-max", cfg.n_max)->capture_default_str();
    index->add_option("--format", format, "plain | csv")->capture_default_str();
    add_caps(index);

    auto* series_cmd = app.add_subcommand("series", "dump a generating series");
    std::string series_name;
    series_cmd->add_option("--name", series_name, "SC2 | SC3 | V | F2 | F3 | A | B | C")->required();
    series_cmd->add_option("--order", cfg.order)->capture_default_str();
    series_cmd->add_option("--max-series", cfg.max_series_n)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    if (serial) {
        cfg.exec = Execution::serial;
    }

    auto want_format = [&](std::initializer_list<OutputFormat> allowed) {
        const auto f = parse_format(format);
        if (!f || std::find(allowed.begin(), allowed.end(), *f) == allowed.end()) {
            throw std::invalid_argument("format '" + format + "' not supported by this command");
        }
        cfg.format = *f;
    };

    try {
        if (seq->parsed()) {
            want_format({OutputFormat::plain, OutputFormat::csv, OutputFormat::bfile});
            write_sequence(out, sequence_values(stat, cfg), cfg.format, stat);
        } else if (verify->parsed()) {
            want_format({OutputFormat::plain, OutputFormat::csv});
            std::vector<Route> selected;
            if (routes == "all") {
                selected = available_routes(cfg.h);
            } else {
                std::stringstream list(routes);
                std::string name;
                while (std::getline(list, name, ',')) {
                    const auto r = parse_route(name);
                    if (!r) {
                        throw std::invalid_argument("unknown route '" + name + "'");
                    }
                    selected.push_back(*r);
                }
            }
            const auto report = build_report(cfg.h, cfg.n_max, selected, cfg);
            render_report(out, report, cfg.format);
            if (!report.all_agree()) {
                for (const auto& row : report.rows) {
                    if (row.agree) {
                        continue;
                    }
                    err << "mismatch at n=" << row.n << ':';
                    for (const auto& [r, v] : row.values) {
                        err << ' ' << route_name(r) << '=' << v.get_str();
                    }
                    err << '\n';
                }
                return kDisagreement;
            }
        } else if (shapes->parsed()) {
            want_format({OutputFormat::plain, OutputFormat::csv});
            write_shapes(out, area, cfg);
        } else if (chains->parsed()) {
            const DyckPath p = DyckPath::parse(path_word);
            if (cfg.h < 0) {
                throw std::invalid_argument("h must be nonnegative");
            }
            if (chain_route == "bruteforce") {
                out << count_chains_from(p, cfg.h).get_str() << '\n';
            } else if (chain_route == "formula") {
                out << sc_h_path_via_formula(p, cfg.h, cfg.limits).get_str() << '\n';
            } else {
                throw std::invalid_argument("unknown route '" + chain_route + "'");
            }
        } else if (lattice->parsed()) {
            if (format == "plain") {
                format = "edges";
            }
            if (format != "dot" && format != "edges") {
                throw std::invalid_argument("lattice format must be dot or edges");
            }
            const auto diagram = build_hasse(lattice_n, cfg.limits);
            if (format == "dot") {
                write_dot(out, diagram);
            } else {
                write_edge_list(out, diagram);
            }
        } else if (index->parsed()) {
            want_format({OutputFormat::plain, OutputFormat::csv});
            write_index_table(out, cfg.h, cfg);
        } else if (series_cmd->parsed()) {
            write_series(out, series_name, cfg);
        }
    } catch (const ResourceLimitError& e) {
        err << "resource cap: " << e.what() << '\n';
        return kResourceCap;
    } catch (const RouteDisagreement& e) {
        err << "disagreement: " << e.what() << '\n';
        return kDisagreement;
    } catch (const dyck::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}

} // namespace dyck
