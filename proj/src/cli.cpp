#include "fracadm/cli.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fracadm/errors.hpp"
#include "fracadm/series_parser.hpp"

namespace fracadm::cli {
namespace {

// Full precision prints the shortest form that reads back to v.
std::string format_real(double v, int digits) {
    char buf[64];
    if (digits >= 17) {
        const auto res = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, res.ptr);
    }
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

struct Options {
    std::optional<int> example;
    std::optional<std::string> ic;
    std::optional<std::string> forcing;
    double alpha = 1.0;
    double beta = 1.0;
    int terms = 6;
    std::optional<std::string> grid;
    std::string format = "csv";
    std::optional<std::string> out_file;
    bool dump_series = false;
    int digits = 17;
    bool orders_given = false;
};

void add_common_options(CLI::App& cmd, Options& o) {
    auto* ex = cmd.add_option("--example", o.example, "Built-in problem 1..4")->check(CLI::Range(1, 4));
    auto* ic = cmd.add_option("--ic", o.ic, "Initial condition u(x, 0) as a series in x");
    auto* g = cmd.add_option("--g", o.forcing, "Forcing term g(x) as a series in x");
    ex->excludes(ic)->excludes(g);
    ic->needs(g);
    g->needs(ic);
    cmd.add_option("--alpha", o.alpha, "Order of the y derivative, in (0, 1]");
    cmd.add_option("--beta", o.beta, "Order of the x derivative, in (0, 1]");
    cmd.add_option("--terms", o.terms, "Number of decomposition components")->check(CLI::PositiveNumber);
    cmd.add_option("--grid", o.grid, "Evaluation grid, e.g. \"x=0.1:0.9:0.1;y=0.01,0.05\"");
    cmd.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "tsv"}));
    cmd.add_option("--out", o.out_file, "Write output to FILE instead of standard output");
    cmd.add_flag("--dump-series", o.dump_series, "Print the truncated series instead of values");
    cmd.add_option("--digits", o.digits, "Significant digits for printed reals")->check(CLI::Range(1, 17));
}

Series parse_x_series(const std::string& text, const char* what) {
    Series s = parse_series(text);
    if (!s.independent_of(Axis::Y))
        throw InvalidArgument(std::string(what) + " must be a series in x only");
    return s;
}

TableRequest build_request(const Options& o) {
    TableRequest request;
    if (o.example) {
        const ExampleId id = example_from_int(*o.example);
        const ProblemSpec base = builtin_problem(id, 1.0, 1.0, 1);
        request.ic = base.ic;
        request.forcing = base.forcing;
        request.example = id;
    } else if (o.ic && o.forcing) {
        request.ic = parse_x_series(*o.ic, "--ic");
        request.forcing = parse_x_series(*o.forcing, "--g");
    } else {
        throw CLI::ValidationError("either --example or both --ic and --g are required");
    }
    if (o.grid) {
        const GridSpec grid = parse_grid(*o.grid);
        request.x_values = grid.x_points;
        request.y_values = grid.y_points;
    }
    request.n_terms = o.terms;
    return request;
}

void check_orders(const Options& o) {
    ProblemSpec probe;
    probe.alpha = o.alpha;
    probe.beta = o.beta;
    probe.validate();
}

void dump_pairs(const TableRequest& request, const Options& o, std::ostream& out) {
    for (const auto& pair : request.order_pairs) {
        ProblemSpec problem;
        problem.alpha = pair.alpha;
        problem.beta = pair.beta;
        problem.ic = request.ic;
        problem.forcing = request.forcing;
        problem.n_terms = request.n_terms;
        const SolutionSeries solution = solve(problem);
        if (request.order_pairs.size() > 1)
            out << "alpha=" << format_real(pair.alpha, o.digits) << " beta=" << format_real(pair.beta, o.digits)
                << ": ";
        out << to_string(solution.truncated(), o.digits) << '\n';
    }
}

void run_solve(Options o, std::ostream& out) {
    check_orders(o);
    TableRequest request = build_request(o);
    request.order_pairs = {OrderPair{o.alpha, o.beta}};
    if (o.dump_series) {
        dump_pairs(request, o, out);
        return;
    }
    write_table(make_table(request), {o.format == "tsv" ? '\t' : ',', o.digits}, out);
}

void run_table(const Options& o, std::ostream& out) {
    TableRequest request = build_request(o);
    if (o.orders_given) {
        check_orders(o);
        request.order_pairs = {OrderPair{o.alpha, o.beta}};
    }
    if (o.dump_series) {
        dump_pairs(request, o, out);
        return;
    }
    write_table(make_table(request), {o.format == "tsv" ? '\t' : ',', o.digits}, out);
}

void run_scan(const Options& o, std::ostream& out) {
    if (!o.example) throw CLI::ValidationError("scan requires --example");
    const auto scan = truncation_scan(example_from_int(*o.example), o.terms);
    write_scan(scan, {o.format == "tsv" ? '\t' : ',', o.digits}, out);
}

} // namespace

void write_table(const TableReport& report, const OutputOptions& options, std::ostream& out) {
    const char d = options.delimiter;
    out << "y" << d << "x" << d << "alpha" << d << "beta" << d << "approx" << d << "exact" << d
        << "abs_error\n";
    for (std::size_t yi = 0; yi < report.y_values.size(); ++yi) {
        for (std::size_t xi = 0; xi < report.x_values.size(); ++xi) {
            for (std::size_t p = 0; p < report.order_pairs.size(); ++p) {
                const TableCell& cell = report.cell(p, yi, xi);
                out << format_real(report.y_values[yi], options.digits) << d
                    << format_real(report.x_values[xi], options.digits) << d
                    << format_real(report.order_pairs[p].alpha, options.digits) << d
                    << format_real(report.order_pairs[p].beta, options.digits) << d
                    << format_real(cell.approx, options.digits) << d
                    << (cell.exact ? format_real(*cell.exact, options.digits) : "") << d
                    << (cell.abs_error ? format_real(*cell.abs_error, options.digits) : "") << '\n';
            }
        }
    }
}

void write_scan(std::span<const ScanRow> scan, const OutputOptions& options, std::ostream& out) {
    const char d = options.delimiter;
    const int best = scan.empty() ? 0 : recovered_depth(scan);
    out << "n" << d << "error_column" << d << "integer_approx_column" << d << "fractional_columns" << d
        << "max_deviation" << d << "recovered\n";
    for (const auto& row : scan) {
        out << row.n << d << format_real(row.error_column, options.digits) << d
            << format_real(row.integer_approx_column, options.digits) << d
            << format_real(row.fractional_columns, options.digits) << d
            << format_real(row.max_deviation, options.digits) << d << (row.n == best ? 1 : 0) << '\n';
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Adomian decomposition solver for D_y^a u + u D_x^b u = g(x)", "fracadm"};
    app.require_subcommand(1);

    Options opts;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one problem and evaluate it on a grid");
    auto* table_cmd = app.add_subcommand("table", "Tabulate a problem over the reference order pairs");
    auto* scan_cmd = app.add_subcommand("scan", "Compare truncation depths against the reference table");
    auto* dump_cmd = app.add_subcommand("dump-series", "Print the truncated series");
    for (auto* cmd : {solve_cmd, table_cmd, scan_cmd, dump_cmd}) add_common_options(*cmd, opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    for (auto* cmd : {solve_cmd, table_cmd}) {
        if (cmd->parsed())
            opts.orders_given = cmd->count("--alpha") > 0 || cmd->count("--beta") > 0;
    }

    std::ostringstream buffer;
    try {
        if (solve_cmd->parsed()) {
            run_solve(opts, buffer);
        } else if (dump_cmd->parsed()) {
            opts.dump_series = true;
            run_solve(opts, buffer);
        } else if (table_cmd->parsed()) {
            run_table(opts, buffer);
        } else {
            run_scan(opts, buffer);
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    }

    if (opts.out_file) {
        std::ofstream file(*opts.out_file, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << *opts.out_file << "' for writing\n";
            return kExitUsage;
        }
        file << buffer.str();
    } else {
        out << buffer.str();
    }
    return kExitOk;
}

} // namespace fracadm::cli
