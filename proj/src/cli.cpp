#include "entloc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "entloc/distribute.hpp"
#include "entloc/measures.hpp"
#include "entloc/optimize.hpp"
#include "entloc/parallel.hpp"

namespace entloc::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

double check_range(double v, double lo, double hi, const char *name) {
    if (!(v >= lo && v <= hi)) {
        throw DomainError(std::string(name) + " must lie in [" +
                          format_double(lo, 6) + ", " + format_double(hi, 6) +
                          "], got " + format_double(v, 6));
    }
    return v;
}

double to_radians(const RunConfig &config, double angle) {
    return config.degrees ? angle * kPi / 180.0 : angle;
}

struct ResolvedParams {
    DecoherenceParams params;
    double theta;
    double phi;
};

ResolvedParams resolve_params(const RunConfig &config) {
    const double base = config.d.value_or(0.0);
    double d1 = config.d1.value_or(base);
    double d2 = config.d2.value_or(base);
    double d3 = config.d3.value_or(base);
    check_range(d1, 0.0, 1.0, "d1");
    check_range(d2, 0.0, 1.0, "d2");
    check_range(d3, 0.0, 1.0, "d3");

    double theta = to_radians(config, config.theta.value_or(
                                          config.degrees ? 90.0 : kPi / 2.0));
    double phi = to_radians(config, config.phi);
    check_range(theta, 0.0, kPi, "theta");
    check_range(phi, 0.0, 2.0 * kPi, "phi");
    return {DecoherenceParams(d1, d2, d3), theta, phi};
}

int resolved_precision(const RunConfig &config) {
    if (config.precision < 1 || config.precision > 17) {
        throw DomainError("precision must lie in [1, 17]");
    }
    return config.precision;
}

int resolved_grid_points(const RunConfig &config, int fallback) {
    if (config.grid_points == 0) {
        return fallback;
    }
    if (config.grid_points < 2) {
        throw DomainError("grid-points must be at least 2");
    }
    return config.grid_points;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(n);
    for (int k = 0; k < n; ++k) {
        out[k] = lo + (hi - lo) * k / (n - 1);
    }
    out.back() = hi;
    return out;
}

// Tabular output shared by the csv and json writers. Cells are formatted
// once so both sinks emit identical numbers.
struct Table {
    std::vector<std::string> header;
    std::vector<bool> numeric;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(const Table &table, std::ostream &out) {
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        out << (c ? "," : "") << table.header[c];
    }
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << row[c];
        }
        out << '\n';
    }
}

json table_rows_json(const Table &table) {
    json rows = json::array();
    for (const auto &row : table.rows) {
        json obj = json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] == "-") {
                obj[table.header[c]] = nullptr;
            } else if (table.numeric[c]) {
                obj[table.header[c]] = std::stod(row[c]);
            } else {
                obj[table.header[c]] = row[c];
            }
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

void write_json_document(const json &config, const Table &table,
                         const json &meta, std::ostream &out) {
    json doc = json::object();
    doc["config"] = config;
    doc["rows"] = table_rows_json(table);
    doc["meta"] = meta;
    out << doc.dump(2) << '\n';
}

json base_meta() {
    json meta = json::object();
    meta["tool_version"] = kToolVersion;
    return meta;
}

std::string resolved_format(const RunConfig &config, const char *fallback) {
    const std::string fmt = config.format.empty() ? fallback : config.format;
    if (fmt != "csv" && fmt != "json" && fmt != "text") {
        throw UsageError("unknown format: " + fmt);
    }
    return fmt;
}

// Closed-form branch quantities with the vanishing-probability branches
// reported as absent.
struct BranchClosedForm {
    double probability;
    bool present;
    double negativity;
    double fef;
    double min_pt;
};

BranchClosedForm amp_branch_closed(const DecoherenceParams &p,
                                   const MeasurementBasis &b, Outcome which) {
    BranchClosedForm out{};
    out.probability = collapse_probability(p, b.theta, which);
    out.present = out.probability >= 1e-14;
    if (out.present) {
        out.min_pt = mu_amp(p, b, which);
        out.negativity = std::max(0.0, -2.0 * out.min_pt);
        out.fef = fef_closed_amp(p, b, which);
    }
    return out;
}

} // namespace

std::string format_double(double v, int precision) {
    if (v == 0.0) {
        v = 0.0; // strip negative zero
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

int cmd_localize(const RunConfig &config, std::ostream &out) {
    const auto [params, theta, phi] = resolve_params(config);
    const int prec = resolved_precision(config);
    const std::string fmt = resolved_format(config, "text");
    if (config.model != "amp" && config.model != "depol") {
        throw UsageError("unknown model: " + config.model);
    }
    const bool depol = config.model == "depol";
    if (depol && !params.is_symmetric()) {
        throw DomainError("the depolarizing model assumes d1 = d2 = d3");
    }

    const MeasurementBasis basis(theta, phi);
    const DensityMatrix ghz = DensityMatrix::from_pure(ghz3());
    const DensityMatrix noisy = depol ? apply_depolarizing_all(ghz, params.d1)
                                      : apply_amplitude_damping(ghz, params);
    const auto outcomes = measure_qubit3(noisy, basis);

    Table table;
    table.header = {"outcome",        "probability",  "probability_closed",
                    "negativity",     "negativity_closed",
                    "fef",            "fef_closed",
                    "min_pt_eig",     "min_pt_eig_closed",
                    "useful"};
    table.numeric = {false, true, true, true, true, true, true, true, true, false};

    for (const auto &outcome : outcomes) {
        const bool plus = outcome.label == Outcome::plus;
        std::vector<std::string> row;
        row.push_back(plus ? "+" : "-");
        row.push_back(format_double(outcome.probability, prec));

        if (depol) {
            const double lambda = depolarized_lambda(params.d1, theta);
            row.push_back(format_double(0.5, prec));
            if (outcome.collapsed) {
                const auto rep = entanglement_report(*outcome.collapsed);
                row.push_back(format_double(rep.negativity, prec));
                row.push_back(format_double(std::max(0.0, -2.0 * lambda), prec));
                row.push_back(format_double(rep.fef, prec));
                row.push_back("-"); // no published closed form for the FEF
                row.push_back(format_double(rep.min_pt_eigenvalue, prec));
                row.push_back(format_double(lambda, prec));
                row.push_back(rep.useful_for_teleportation ? "yes" : "no");
            } else {
                row.insert(row.end(), {"-", "-", "-", "-", "-", "-", "-"});
            }
        } else {
            const auto closed = amp_branch_closed(params, basis, outcome.label);
            row.push_back(format_double(closed.probability, prec));
            if (outcome.collapsed && closed.present) {
                const auto rep = entanglement_report(*outcome.collapsed);
                row.push_back(format_double(rep.negativity, prec));
                row.push_back(format_double(closed.negativity, prec));
                row.push_back(format_double(rep.fef, prec));
                row.push_back(format_double(closed.fef, prec));
                row.push_back(format_double(rep.min_pt_eigenvalue, prec));
                row.push_back(format_double(closed.min_pt, prec));
                row.push_back(rep.useful_for_teleportation ? "yes" : "no");
            } else {
                row.insert(row.end(), {"-", "-", "-", "-", "-", "-", "-"});
            }
        }
        table.rows.push_back(std::move(row));
    }

    json cfg = json::object();
    cfg["subcommand"] = "localize";
    cfg["model"] = config.model;
    cfg["d1"] = params.d1;
    cfg["d2"] = params.d2;
    cfg["d3"] = params.d3;
    cfg["theta"] = theta;
    cfg["phi"] = phi;
    cfg["precision"] = prec;

    if (fmt == "json") {
        write_json_document(cfg, table, base_meta(), out);
    } else if (fmt == "csv") {
        write_csv(table, out);
    } else {
        out << "localize  model=" << config.model
            << "  d1=" << format_double(params.d1, prec)
            << "  d2=" << format_double(params.d2, prec)
            << "  d3=" << format_double(params.d3, prec)
            << "  theta=" << format_double(theta, prec)
            << "  phi=" << format_double(phi, prec) << '\n';
        for (const auto &row : table.rows) {
            out << "outcome " << row[0] << '\n';
            out << "  probability  " << row[1] << "  (closed " << row[2]
                << ")\n";
            if (row[3] == "-") {
                out << "  branch absent (zero probability)\n";
                continue;
            }
            const auto line = [&](const char *name, const std::string &numeric,
                                  const std::string &closed) {
                out << "  " << name << "  numeric=" << numeric
                    << "  closed=" << closed;
                if (closed != "-") {
                    out << "  |diff|="
                        << format_double(
                               std::abs(std::stod(numeric) - std::stod(closed)),
                               prec);
                }
                out << '\n';
            };
            line("negativity ", row[3], row[4]);
            line("fef        ", row[5], row[6]);
            line("min_pt_eig ", row[7], row[8]);
            out << "  useful_for_teleportation " << row[9] << '\n';
        }
    }
    return kExitOk;
}

namespace {

// Branch negativity in the symmetric amplitude case, with the vanishing
// branch reported as 0 so grids stay total.
double figure_n(double d, double theta, Outcome which) {
    const DecoherenceParams p = DecoherenceParams::symmetric(d);
    if (collapse_probability(p, theta, which) < 1e-14) {
        return 0.0;
    }
    return std::max(0.0, -2.0 * mu_symmetric(d, theta, which));
}

double figure_f(double d, double theta, Outcome which) {
    const DecoherenceParams p = DecoherenceParams::symmetric(d);
    if (collapse_probability(p, theta, which) < 1e-14) {
        return 0.0;
    }
    return 0.5 - mu_symmetric(d, theta, which);
}

Table figure_table(int figure_id, int n, int prec, double theta_prime,
                   json &grid_meta) {
    Table table;
    switch (figure_id) {
    case 2: {
        const auto ds = linspace(0.0, 1.0, n);
        const auto thetas = linspace(0.0, kPi, n);
        table.header = {"d", "theta", "n_plus", "n_minus"};
        table.numeric = {true, true, true, true};
        table.rows.resize(static_cast<std::size_t>(n) * n);
        parallel_for(table.rows.size(), [&](std::size_t k) {
            const double d = ds[k / n];
            const double theta = thetas[k % n];
            table.rows[k] = {format_double(d, prec), format_double(theta, prec),
                             format_double(figure_n(d, theta, Outcome::plus), prec),
                             format_double(figure_n(d, theta, Outcome::minus), prec)};
        });
        grid_meta = {{"d", n}, {"theta", n}};
        break;
    }
    case 3:
    case 5: {
        const bool deltas = figure_id == 3;
        const auto ds = deltas ? linspace(0.0, 1.0, n)
                               : linspace((std::sqrt(5.0) - 1.0) / 2.0, 0.65, n);
        table.header = {"panel", "d", "theta", deltas ? "delta_n" : "f"};
        table.numeric = {false, true, true, true};
        table.rows.resize(2 * static_cast<std::size_t>(n) * n);
        const auto upper = linspace(kPi / 2.0, 2.0 * kPi / 3.0, n);
        const auto lower = linspace(kPi / 3.0, kPi / 2.0, n);
        parallel_for(table.rows.size(), [&](std::size_t k) {
            const bool plus = k < table.rows.size() / 2;
            const std::size_t j = plus ? k : k - table.rows.size() / 2;
            const Outcome which = plus ? Outcome::plus : Outcome::minus;
            const double d = ds[j / n];
            const double theta = plus ? upper[j % n] : lower[j % n];
            const double value =
                deltas ? figure_n(d, theta, which) -
                             figure_n(d, kPi / 2.0, which)
                       : figure_f(d, theta, which);
            table.rows[k] = {plus ? "plus" : "minus", format_double(d, prec),
                             format_double(theta, prec),
                             format_double(value, prec)};
        });
        grid_meta = {{"panel", 2}, {"d", n}, {"theta", n}};
        break;
    }
    case 4: {
        const auto ds = linspace(0.58, 0.64, n);
        const auto thetas = linspace(0.0, kPi, n);
        table.header = {"d", "theta", "n_ave"};
        table.numeric = {true, true, true};
        table.rows.resize(static_cast<std::size_t>(n) * n);
        parallel_for(table.rows.size(), [&](std::size_t k) {
            const double d = ds[k / n];
            const double theta = thetas[k % n];
            const double value = n_average(DecoherenceParams::symmetric(d),
                                           MeasurementBasis(theta));
            table.rows[k] = {format_double(d, prec), format_double(theta, prec),
                             format_double(value, prec)};
        });
        grid_meta = {{"d", n}, {"theta", n}};
        break;
    }
    case 7: {
        const auto points =
            compare_scan(linspace(0.0, 1.0, n), linspace(0.0, kPi / 2.0, n), {0.0});
        table.header = {"d", "theta", "delta_n"};
        table.numeric = {true, true, true};
        table.rows.resize(points.size());
        parallel_for(points.size(), [&](std::size_t k) {
            table.rows[k] = {format_double(points[k].d, prec),
                             format_double(points[k].theta, prec),
                             format_double(points[k].delta_n, prec)};
        });
        grid_meta = {{"d", n}, {"theta", n}};
        break;
    }
    case 8: {
        const auto points = compare_scan(linspace(0.0, 1.0, n), {theta_prime},
                                         linspace(0.0, 0.1, n));
        table.header = {"d", "r", "delta_n"};
        table.numeric = {true, true, true};
        table.rows.resize(points.size());
        parallel_for(points.size(), [&](std::size_t k) {
            const auto &pt = points[k];
            const double r = pt.d > 0.0 ? pt.d3 / pt.d : 0.0;
            table.rows[k] = {format_double(pt.d, prec), format_double(r, prec),
                             format_double(pt.delta_n, prec)};
        });
        grid_meta = {{"d", n}, {"r", n}};
        break;
    }
    default:
        throw UsageError("unknown figure id: " + std::to_string(figure_id) +
                         " (known: 2, 3, 4, 5, 7, 8)");
    }
    return table;
}

} // namespace

int cmd_figure(const RunConfig &config, std::ostream &out) {
    const int prec = resolved_precision(config);
    const int n = resolved_grid_points(config, 201);
    const std::string fmt = resolved_format(config, "csv");
    const double theta_prime = to_radians(config, config.theta_prime);
    if (config.figure_id == 8) {
        check_range(theta_prime, 0.0, kPi, "theta-prime");
    }

    json grid_meta;
    const Table table =
        figure_table(config.figure_id, n, prec, theta_prime, grid_meta);

    if (fmt == "json") {
        json cfg = json::object();
        cfg["subcommand"] = "figure";
        cfg["figure"] = config.figure_id;
        cfg["grid_points"] = n;
        if (config.figure_id == 8) {
            cfg["theta_prime"] = theta_prime;
        }
        cfg["precision"] = prec;
        json meta = base_meta();
        meta["grid"] = grid_meta;
        write_json_document(cfg, table, meta, out);
    } else {
        write_csv(table, out);
    }
    return kExitOk;
}

int cmd_optimize(const RunConfig &config, std::ostream &out) {
    const auto [params, theta, phi] = resolve_params(config);
    (void)theta;
    (void)phi;
    const int prec = resolved_precision(config);
    const int n = resolved_grid_points(config, 2001);
    const std::string fmt = resolved_format(config, "text");
    const auto obj = parse_objective(config.objective);
    if (!obj) {
        throw UsageError("unknown objective: " + config.objective);
    }

    const ScanResult scan = optimize_theta(*obj, params, n);

    Table table;
    table.header = {"objective", "best_theta", "best_value", "flat"};
    table.numeric = {false, true, true, false};
    table.rows.push_back({objective_name(*obj),
                          format_double(scan.best_theta, prec),
                          format_double(scan.best_value, prec),
                          scan.flat ? "yes" : "no"});

    json cfg = json::object();
    cfg["subcommand"] = "optimize";
    cfg["objective"] = objective_name(*obj);
    cfg["d1"] = params.d1;
    cfg["d2"] = params.d2;
    cfg["d3"] = params.d3;
    cfg["grid_points"] = n;
    cfg["precision"] = prec;

    if (fmt == "json") {
        json meta = base_meta();
        meta["grid"] = json{{"theta", n}};
        if (scan.flat) {
            meta["warning"] = "flat objective over the whole theta grid";
        }
        write_json_document(cfg, table, meta, out);
    } else if (fmt == "csv") {
        write_csv(table, out);
    } else {
        out << "optimize  objective=" << objective_name(*obj)
            << "  d1=" << format_double(params.d1, prec)
            << "  d2=" << format_double(params.d2, prec)
            << "  d3=" << format_double(params.d3, prec) << '\n';
        out << "best_theta=" << format_double(scan.best_theta, prec) << '\n';
        out << "best_value=" << format_double(scan.best_value, prec) << '\n';
        if (scan.flat) {
            out << "warning=flat objective over the whole theta grid\n";
        }
    }
    return kExitOk;
}

int cmd_threshold(const RunConfig &config, std::ostream &out) {
    const auto [params, theta, phi] = resolve_params(config);
    (void)params;
    (void)phi;
    const int prec = resolved_precision(config);
    const std::string fmt = resolved_format(config, "text");
    const auto obj = parse_objective(config.objective);
    if (!obj) {
        throw UsageError("unknown objective: " + config.objective);
    }

    const ThresholdResult res = sudden_death_threshold(theta, *obj);

    Table table;
    table.header = {"objective", "theta", "d_star", "bracket_width", "found"};
    table.numeric = {false, true, true, true, false};
    table.rows.push_back(
        {objective_name(*obj), format_double(theta, prec),
         res.found ? format_double(res.d_star, prec) : "-",
         res.found ? format_double(res.bracket_width, prec) : "-",
         res.found ? "yes" : "no"});

    json cfg = json::object();
    cfg["subcommand"] = "threshold";
    cfg["objective"] = objective_name(*obj);
    cfg["theta"] = theta;
    cfg["precision"] = prec;

    if (fmt == "json") {
        json meta = base_meta();
        if (!res.found) {
            meta["warning"] = "objective has no sign change in [0, 1]";
        }
        write_json_document(cfg, table, meta, out);
    } else if (fmt == "csv") {
        write_csv(table, out);
    } else {
        out << "threshold  objective=" << objective_name(*obj)
            << "  theta=" << format_double(theta, prec) << '\n';
        if (res.found) {
            out << "d_star=" << format_double(res.d_star, prec) << '\n';
            out << "bracket_width=" << format_double(res.bracket_width, prec)
                << '\n';
        } else {
            out << "warning=objective has no sign change in [0, 1]\n";
        }
    }
    return kExitOk;
}

int cmd_compare(const RunConfig &config, std::ostream &out) {
    const auto [params, theta, phi] = resolve_params(config);
    (void)phi;
    if (params.d1 != params.d2) {
        throw DomainError("the comparison assumes d1 = d2 (use --d)");
    }
    const int prec = resolved_precision(config);
    const std::string fmt = resolved_format(config, "text");

    const ComparisonPoint pt = compare_point(params.d1, theta, params.d3);

    Table table;
    table.header = {"d",       "theta",      "d3",      "n_dds",  "n_ads_plus",
                    "f_dds",   "f_ads_plus", "delta_n", "delta_f", "p_plus"};
    table.numeric.assign(10, true);
    table.rows.push_back(
        {format_double(pt.d, prec), format_double(pt.theta, prec),
         format_double(pt.d3, prec), format_double(pt.n_dds, prec),
         format_double(pt.n_ads_plus, prec), format_double(pt.f_dds, prec),
         format_double(pt.f_ads_plus, prec), format_double(pt.delta_n, prec),
         format_double(pt.delta_f, prec), format_double(pt.p_plus, prec)});

    json cfg = json::object();
    cfg["subcommand"] = "compare";
    cfg["d"] = params.d1;
    cfg["d3"] = params.d3;
    cfg["theta"] = theta;
    cfg["precision"] = prec;

    if (fmt == "json") {
        write_json_document(cfg, table, base_meta(), out);
    } else if (fmt == "csv") {
        write_csv(table, out);
    } else {
        out << "compare  d=" << format_double(pt.d, prec)
            << "  theta=" << format_double(pt.theta, prec)
            << "  d3=" << format_double(pt.d3, prec) << '\n';
        out << "dds  negativity=" << format_double(pt.n_dds, prec)
            << "  fef=" << format_double(pt.f_dds, prec) << '\n';
        out << "ads+ negativity=" << format_double(pt.n_ads_plus, prec)
            << "  fef=" << format_double(pt.f_ads_plus, prec)
            << "  p_plus=" << format_double(pt.p_plus, prec) << '\n';
        out << "delta_n=" << format_double(pt.delta_n, prec)
            << "  delta_f=" << format_double(pt.delta_f, prec) << '\n';
    }
    return kExitOk;
}

int run(const RunConfig &config) {
    try {
        std::ofstream file;
        std::ostream *out = &std::cout;
        if (!config.output.empty()) {
            file.open(config.output, std::ios::binary);
            if (!file) {
                throw UsageError("cannot open output file: " + config.output);
            }
            out = &file;
        }

        if (config.subcommand == "localize") {
            return cmd_localize(config, *out);
        }
        if (config.subcommand == "figure") {
            return cmd_figure(config, *out);
        }
        if (config.subcommand == "optimize") {
            return cmd_optimize(config, *out);
        }
        if (config.subcommand == "threshold") {
            return cmd_threshold(config, *out);
        }
        if (config.subcommand == "compare") {
            return cmd_compare(config, *out);
        }
        throw UsageError("unknown subcommand: " + config.subcommand);
    } catch (const UsageError &err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitUsage;
    } catch (const DomainError &err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument &err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitDomain;
    }
}

} // namespace entloc::cli
