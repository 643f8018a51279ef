#include <lacuna/cli.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <lacuna/delta.hpp>
#include <lacuna/series.hpp>
#include <lacuna/zeros.hpp>

namespace lacuna::cli {
namespace {

using json = nlohmann::json;
using series::SeriesParams;

// Rows deeper than this report w/s only; x would collapse against 1.
constexpr double kDeepRowW = 1e-12;

std::string fixed_str(double v, int decimals) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string sci_str(double v, int decimals) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.*e", decimals, v);
    return buf;
}

struct Options {
    double a = 2.0;
    double eps = 1e-18;
    int kmax = 1024;
    int decimals = 10;
    std::string format = "csv";

    // eval
    double x = 0.5;
    std::string what;
    // zeros / table
    std::string target;
    int count = 1;
    // sweep
    double from = 0.0;
    double to = 0.0;
    int points = 0;
    bool log_w = false;

    SeriesParams params() const { return SeriesParams{a, eps, kmax}; }
    bool json_out() const { return format == "json"; }
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--a", opt.a, "series base, a > 1")->required();
    cmd->add_option("--eps", opt.eps, "term truncation threshold")->capture_default_str();
    cmd->add_option("--kmax", opt.kmax, "harmonic cap")->capture_default_str();
    cmd->add_option("--decimals", opt.decimals, "printed decimal digits")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

int do_eval(const Options& opt, std::ostream& out) {
    SeriesParams p = opt.params();
    double v = 0.0;
    if (opt.what == "f") {
        v = series::f_bilateral(opt.x, p);
    } else if (opt.what == "g") {
        v = series::g_ref(opt.x, p.a);
    } else if (opt.what == "delta") {
        v = delta::delta_of_x(opt.x, p);
    } else if (opt.what == "delta0") {
        v = delta::delta0(1.0 - opt.x, p);
    } else {
        v = delta::delta0_dominant(1.0 - opt.x, p);
    }
    if (opt.json_out()) {
        json j{{"a", opt.a},
               {"x", opt.x},
               {"what", opt.what},
               {"value", v},
               {"display", fixed_str(v, opt.decimals)}};
        out << j.dump() << "\n";
    } else {
        out << fixed_str(v, opt.decimals) << "\n";
    }
    return 0;
}

int do_zeros(const Options& opt, std::ostream& out) {
    auto rows = zeros::build_table(opt.a, opt.count, opt.params());
    const bool want_delta = (opt.target == "delta");
    if (opt.json_out()) {
        json list = json::array();
        for (const auto& row : rows) {
            const auto& z = want_delta ? row.zero_delta : row.zero_delta0;
            json item{{"n", row.n}, {"w", z.w}, {"s", z.s}};
            if (z.w >= kDeepRowW) {
                item["x"] = z.x;
                item["x_display"] = fixed_str(z.x, opt.decimals);
            }
            list.push_back(item);
        }
        json j{{"a", opt.a}, {"count", opt.count}, {"target", opt.target}, {"zeros", list}};
        out << j.dump() << "\n";
    } else {
        out << "n,x,w,s\n";
        for (const auto& row : rows) {
            const auto& z = want_delta ? row.zero_delta : row.zero_delta0;
            out << row.n << ','
                << (z.w >= kDeepRowW ? fixed_str(z.x, opt.decimals) : std::string()) << ','
                << sci_str(z.w, opt.decimals) << ',' << sci_str(z.s, opt.decimals) << "\n";
        }
    }
    return 0;
}

int do_table(const Options& opt, std::ostream& out) {
    auto rows = zeros::build_table(opt.a, opt.count, opt.params());
    const int rel_decimals = std::max(1, opt.decimals - 3);
    if (opt.json_out()) {
        json list = json::array();
        for (const auto& row : rows) {
            json item{{"n", row.n},
                      {"w_delta", row.zero_delta.w},
                      {"w_delta0", row.zero_delta0.w},
                      {"s_delta", row.zero_delta.s},
                      {"s_delta0", row.zero_delta0.s},
                      {"rel_err", row.rel_err},
                      {"rel_err_display", fixed_str(row.rel_err, rel_decimals)}};
            if (row.zero_delta.w >= kDeepRowW) {
                item["x_delta"] = row.x_delta;
                item["x_delta0"] = row.x_delta0;
                item["x_delta_display"] = fixed_str(row.x_delta, opt.decimals);
                item["x_delta0_display"] = fixed_str(row.x_delta0, opt.decimals);
            }
            list.push_back(item);
        }
        json j{{"a", opt.a}, {"count", opt.count}, {"rows", list}};
        out << j.dump() << "\n";
    } else {
        out << "n,x_delta,x_delta0,rel_err\n";
        for (const auto& row : rows) {
            bool deep = row.zero_delta.w < kDeepRowW;
            out << row.n << ','
                << (deep ? std::string() : fixed_str(row.x_delta, opt.decimals)) << ','
                << (deep ? std::string() : fixed_str(row.x_delta0, opt.decimals)) << ','
                << fixed_str(row.rel_err, rel_decimals) << "\n";
        }
    }
    return 0;
}

int do_sweep(const Options& opt, std::ostream& out) {
    if (!(opt.from > 0.0) || !(opt.to < 1.0) || !(opt.from < opt.to)) {
        throw std::domain_error("cli: sweep requires 0 < from < to < 1");
    }
    if (opt.points < 2) {
        throw std::domain_error("cli: sweep requires points >= 2");
    }
    SeriesParams p = opt.params();
    std::vector<double> xs(opt.points);
    if (opt.log_w) {
        double s_from = std::log(1.0 - opt.from);
        double s_to = std::log(1.0 - opt.to);
        for (int i = 0; i < opt.points; ++i) {
            double s = s_from + (s_to - s_from) * i / (opt.points - 1);
            xs[i] = -std::expm1(s);
        }
    } else {
        for (int i = 0; i < opt.points; ++i) {
            xs[i] = opt.from + (opt.to - opt.from) * i / (opt.points - 1);
        }
    }
    xs.front() = opt.from;
    xs.back() = opt.to;

    json list = json::array();
    if (!opt.json_out()) out << "x,f,g,delta,delta0\n";
    for (double x : xs) {
        double f = series::f_bilateral(x, p);
        double g = series::g_ref(x, p.a);
        double d = delta::delta_of_x(x, p);
        double d0 = delta::delta0(1.0 - x, p);
        if (opt.json_out()) {
            list.push_back(json{{"x", x}, {"w", 1.0 - x}, {"f", f}, {"g", g}, {"delta", d}, {"delta0", d0}});
        } else {
            out << sci_str(x, opt.decimals) << ',' << sci_str(f, opt.decimals) << ','
                << sci_str(g, opt.decimals) << ',' << sci_str(d, opt.decimals) << ','
                << sci_str(d0, opt.decimals) << "\n";
        }
    }
    if (opt.json_out()) {
        json j{{"a", opt.a}, {"points", opt.points}, {"log_w", opt.log_w}, {"samples", list}};
        out << j.dump() << "\n";
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"bilateral lacunary series: f, g, the oscillating remainder, and its zeroes"};
    app.name("lacuna");
    app.require_subcommand(1);

    Options opt;

    CLI::App* eval = app.add_subcommand("eval", "evaluate one function at one point");
    add_common_flags(eval, opt);
    eval->add_option("--x", opt.x, "abscissa in (0, 1)")->required();
    eval->add_option("--what", opt.what, "function to evaluate")
        ->check(CLI::IsMember({"f", "g", "delta", "delta0", "dominant"}))
        ->required();

    CLI::App* zeros_cmd = app.add_subcommand("zeros", "refined zeroes in increasing x order");
    add_common_flags(zeros_cmd, opt);
    zeros_cmd->add_option("--target", opt.target, "which function's zeroes")
        ->check(CLI::IsMember({"delta", "delta0"}))
        ->required();
    zeros_cmd->add_option("--count", opt.count, "number of zeroes")->required();

    CLI::App* table = app.add_subcommand("table", "paired zero table with relative errors");
    add_common_flags(table, opt);
    table->add_option("--count", opt.count, "number of rows")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "sample x, f, g, delta, delta0 over a range");
    add_common_flags(sweep, opt);
    sweep->add_option("--from", opt.from, "first x")->required();
    sweep->add_option("--to", opt.to, "last x")->required();
    sweep->add_option("--points", opt.points, "sample count (endpoints included)")->required();
    sweep->add_flag("--log-w", opt.log_w, "space samples uniformly in ln(1-x)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("lacuna");
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage: " << e.what() << "\n";
        return 2;
    }

    try {
        if (eval->parsed()) return do_eval(opt, out);
        if (zeros_cmd->parsed()) return do_zeros(opt, out);
        if (table->parsed()) return do_table(opt, out);
        return do_sweep(opt, out);
    } catch (const std::domain_error& e) {
        err << "error: domain: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: numeric: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lacuna::cli
