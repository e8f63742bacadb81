#ifndef DYCKCHAINS_COMMANDS_HPP
#define DYCKCHAINS_COMMANDS_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include <dyckchains/kernels.hpp>
#include <dyckchains/limits.hpp>
#include <dyckchains/sequence_io.hpp>

namespace dyck {

enum ExitCode : int { kOk = 0, kDisagreement = 1, kUsage = 2, kResourceCap = 3 };

enum class Route { bruteforce, formula, series, closedform };

std::optional<Route> parse_route(std::string_view name);
std::string route_name(Route route);
// Routes that can compute sc_h at all: series and closed form exist for h = 2, 3.
std::vector<Route> available_routes(int h);

struct RunConfig {
    int n_max = 9;
    int h = 2;
    int order = kDefaultSeriesOrder;
    OutputFormat format = OutputFormat::plain;
    Limits limits;                          // exhaustive routes
    int max_series_n = kDefaultMaxSeriesN;  // series-backed routes
    Execution exec = Execution::parallel;
};

// Values per route for each n, with an agreement flag per row.
struct ChainCountReport {
    struct Row {
        int n = 0;
        std::map<Route, mpz_class> values;
        bool agree = true;
    };
    int h = 0;
    std::vector<Route> routes;
    std::vector<Row> rows;

    bool all_agree() const;
};

// Throws ResourceLimitError when a route's cap is exceeded and
// std::invalid_argument when a route does not exist for h.
ChainCountReport build_report(int h, int n_max, const std::vector<Route>& routes, const RunConfig& config);
void render_report(std::ostream& out, const ChainCountReport& report, OutputFormat format);

// a(0..n_max) for stat in {sc2, sc3, catalan, edges, valley-abscissae}.
std::vector<mpz_class> sequence_values(std::string_view stat, const RunConfig& config);

// Full command line (without the program name). Returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dyck

#endif
