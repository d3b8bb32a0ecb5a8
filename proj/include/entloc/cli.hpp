#ifndef ENTLOC_CLI_HPP
#define ENTLOC_CLI_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

// Command layer shared by the entloc binary and the test suites. Every
// command renders into a stream so outputs stay byte-reproducible.

namespace entloc::cli {

inline constexpr const char *kToolVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

// Unknown subcommand / figure id / objective / model.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numeric flag outside its documented domain.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string subcommand;

    std::string model = "amp"; // amp | depol
    std::optional<double> d;   // sets d1 = d2 = d3 unless overridden
    std::optional<double> d1;
    std::optional<double> d2;
    std::optional<double> d3;
    std::optional<double> theta; // radians unless degrees is set
    double phi = 0.0;

    int figure_id = 0;
    int grid_points = 0; // 0 = per-command default
    double theta_prime = 1.5;

    std::string objective = "nave";

    std::string output;    // empty = stdout
    std::string format;    // csv | json | text; empty = per-command default
    int precision = 12;    // decimal digits in emitted numbers
    bool degrees = false;  // interpret angle flags as degrees
};

// Fixed-point, locale-independent formatting; negative zero is normalized.
std::string format_double(double v, int precision);

int cmd_localize(const RunConfig &config, std::ostream &out);
int cmd_figure(const RunConfig &config, std::ostream &out);
int cmd_optimize(const RunConfig &config, std::ostream &out);
int cmd_threshold(const RunConfig &config, std::ostream &out);
int cmd_compare(const RunConfig &config, std::ostream &out);

// Dispatches on subcommand, opens the output sink, and maps errors to exit
// codes (0 ok, 2 usage, 3 domain validation). Messages go to stderr.
int run(const RunConfig &config);

} // namespace entloc::cli

#endif
