#include "fracadm/problems.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "fracadm/errors.hpp"

namespace fracadm {
namespace {

// Published values, transcribed digit for digit. Columns: y, x, approx at
// (0.5, 0.5), (0.75, 0.75), (1, 1), exact at (1, 1), |exact - approx| at (1, 1).
struct RawRow {
    double y;
    double x;
    const char* approx_half;
    const char* approx_three_quarters;
    const char* approx_one;
    const char* exact;
    const char* error;
};

constexpr RawRow kRawExample1[] = {
    {0.01, 0.3, "1.02826", "1.00972", "1.00295", "1.00295", "1.78455e-17"},
    {0.01, 0.6, "1.05931", "1.01991", "1.00595", "1.00595", "1.79697e-17"},
    {0.01, 0.9, "1.09087", "1.03015", "1.00895", "1.00895", "1.81007e-17"},
    {0.05, 0.3, "1.05085", "1.02803", "1.01374", "1.01374", "1.35317e-12"},
    {0.05, 0.6, "1.11205", "1.06088", "1.02873", "1.02873", "1.36598e-12"},
    {0.05, 0.9, "1.17514", "1.0942", "1.04371", "1.04371", "1.37878e-12"},
    {0.1, 0.3, "1.05979", "1.04063", "1.02492", "1.02492", "3.4865e-10"},
    {0.1, 0.6, "1.13731", "1.09334", "1.05482", "1.05482", "3.55184e-10"},
    {0.1, 0.9, "1.21761", "1.14748", "1.08472", "1.08472", "3.61719e-10"},
};

constexpr RawRow kRawExample2[] = {
    {0.01, 0.3, "-0.210064", "-0.274905", "-0.29298", "-0.29298", "2.9798e-9"},
    {0.01, 0.6, "-0.555538", "-0.586408", "-0.59601", "-0.59601", "6.0101e-9"},
    {0.01, 0.9, "-0.910206", "-0.898583", "-0.89904", "-0.89904", "9.04041e-9"},
    {0.05, 0.3, "-0.0782081", "-0.213214", "-0.264472", "-0.264474", "1.80921e-6"},
    {0.05, 0.6, "-0.50313", "-0.556151", "-0.580259", "-0.580263", "3.78289e-6"},
    {0.05, 0.9, "-0.966632", "-0.90218", "-0.896047", "-0.896053", "5.75658e-6"},
    {0.1, 0.3, "0.0446003", "-0.147862", "-0.22775", "-0.227778", "2.77778e-5"},
    {0.1, 0.6, "-0.454211", "-0.528458", "-0.56105", "-0.561111", "6.11111e-5"},
    {0.1, 0.9, "-1.03523", "-0.916113", "-0.89435", "-0.894444", "9.44444e-5"},
};

constexpr RawRow kRawExample3[] = {
    {0.01, 0.3, "1.20487", "1.26054", "1.28713", "1.28713", "1.28713e-8"},
    {0.01, 0.6, "1.45717", "1.54776", "1.58416", "1.58416", "1.58416e-8"},
    {0.01, 0.9, "1.71169", "1.83537", "1.88119", "1.88119", "1.88119e-8"},
    {0.05, 0.3, "1.10925", "1.1828", "1.23809", "1.2381", "7.7381e-6"},
    {0.05, 0.6, "1.29774", "1.4429", "1.5238", "1.52381", "9.52381e-6"},
    {0.05, 0.9, "1.49262", "1.70524", "1.80951", "1.80952", "1.13095e-5"},
    {0.1, 0.3, "1.00627", "1.12089", "1.1817", "1.18182", "1.18182e-4"},
    {0.1, 0.6, "1.11627", "1.35561", "1.4544", "1.45455", "1.45455e-4"},
    {0.1, 0.9, "1.23329", "1.59591", "1.7271", "1.72727", "1.72727e-4"},
};

constexpr RawRow kRawExample4[] = {
    {0.01, 0.3, "0.276009", "0.290771", "0.29703", "0.29703", "2.97029e-13"},
    {0.01, 0.6, "0.544279", "0.580275", "0.594059", "0.594059", "5.94058e-13"},
    {0.01, 0.9, "0.80891", "0.869243", "0.891089", "0.891089", "8.91087e-13"},
    {0.05, 0.3, "0.252999", "0.271796", "0.285714", "0.285714", "4.46429e-9"},
    {0.05, 0.6, "0.491149", "0.540065", "0.571429", "0.571429", "8.92857e-9"},
    {0.05, 0.9, "0.720922", "0.806873", "0.857143", "0.857143", "1.33929e-8"},
    {0.1, 0.3, "0.23591", "0.256139", "0.272727", "0.272727", "2.72727e-7"},
    {0.1, 0.6, "0.442692", "0.507181", "0.545454", "0.545454", "5.45455e-7"},
    {0.1, 0.9, "0.624414", "0.756131", "0.818181", "0.818181", "8.18182e-7"},
};

using ReferenceTable = std::array<ReferenceRow, 9>;

ReferenceTable build_reference(std::span<const RawRow> raw) {
    ReferenceTable table{};
    for (std::size_t i = 0; i < table.size(); ++i) {
        const RawRow& r = raw[i];
        table[i] = ReferenceRow{r.y,
                                r.x,
                                {parse_printed(r.approx_half), parse_printed(r.approx_three_quarters),
                                 parse_printed(r.approx_one)},
                                parse_printed(r.exact),
                                parse_printed(r.error)};
    }
    return table;
}

double relative_deviation(double computed, double reference) {
    return std::abs(computed - reference) / std::abs(reference);
}

std::optional<std::vector<TableCell>> try_tabulate(const TableRequest& request, const OrderPair& pair) {
    TableRequest single = request;
    single.order_pairs = {pair};
    try {
        return make_table(single).cells;
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace

ExampleId example_from_int(int id) {
    if (id < 1 || id > 4) throw InvalidArgument("unknown example " + std::to_string(id) + ", expected 1..4");
    return static_cast<ExampleId>(id);
}

ProblemSpec builtin_problem(ExampleId id, double alpha, double beta, int n_terms) {
    ProblemSpec p;
    p.alpha = alpha;
    p.beta = beta;
    p.n_terms = n_terms;
    switch (id) {
    case ExampleId::One:
        p.ic = Series::constant(1.0);
        p.forcing = Series::monomial(1.0, 1.0);
        break;
    case ExampleId::Two:
        p.ic = Series::monomial(-1.0, 1.0);
        p.forcing = Series::constant(1.0);
        break;
    case ExampleId::Three:
        p.ic = Series{{1.0, 0.0, 0.0}, {1.0, 1.0, 0.0}};
        break;
    case ExampleId::Four:
        p.ic = Series::monomial(1.0, 1.0);
        break;
    default:
        throw InvalidArgument("unknown example");
    }
    p.validate();
    return p;
}

long double exact_solution_extended(ExampleId id, long double x, long double y) {
    switch (id) {
    case ExampleId::One:
        return x * std::tanh(y) + 1.0L / std::cosh(y);
    case ExampleId::Two:
        if (y == 1.0L) throw DomainError("exact solution of example 2 is singular at y = 1");
        return (2.0L * x - 2.0L * y + y * y) / (2.0L * (y - 1.0L));
    case ExampleId::Three:
        if (y == -1.0L) throw DomainError("exact solution is singular at y = -1");
        return (1.0L + x) / (1.0L + y);
    case ExampleId::Four:
        if (y == -1.0L) throw DomainError("exact solution is singular at y = -1");
        return x / (1.0L + y);
    }
    throw InvalidArgument("unknown example");
}

double exact_solution(ExampleId id, double x, double y) {
    return static_cast<double>(exact_solution_extended(id, x, y));
}

const TableCell& TableReport::cell(std::size_t pair, std::size_t yi, std::size_t xi) const {
    return cells.at((pair * y_values.size() + yi) * x_values.size() + xi);
}

TableReport make_table(const TableRequest& request) {
    if (request.n_terms < 1) throw InvalidArgument("number of terms must be positive");
    TableReport report;
    report.example = request.example;
    report.order_pairs = request.order_pairs;
    report.y_values = request.y_values;
    report.x_values = request.x_values;
    report.n_terms = request.n_terms;
    report.cells.reserve(request.order_pairs.size() * request.y_values.size() *
                         request.x_values.size());

    for (const auto& pair : request.order_pairs) {
        ProblemSpec problem;
        problem.alpha = pair.alpha;
        problem.beta = pair.beta;
        problem.ic = request.ic;
        problem.forcing = request.forcing;
        problem.n_terms = request.n_terms;
        problem.term_cap = request.term_cap;
        const SolutionSeries solution = solve(problem);
        const Series& phi = solution.truncated();
        const bool with_exact = request.example.has_value() && pair.is_integer();

        for (double y : request.y_values) {
            for (double x : request.x_values) {
                const long double approx = evaluate_extended(phi, x, y);
                TableCell cell;
                cell.approx = static_cast<double>(approx);
                if (with_exact) {
                    const long double exact = exact_solution_extended(*request.example, x, y);
                    cell.exact = static_cast<double>(exact);
                    cell.abs_error = static_cast<double>(std::abs(exact - approx));
                }
                report.cells.push_back(cell);
            }
        }
    }
    return report;
}

TableReport make_table(ExampleId id, int n_terms) {
    const ProblemSpec base = builtin_problem(id, 1.0, 1.0, std::max(n_terms, 1));
    TableRequest request;
    request.ic = base.ic;
    request.forcing = base.forcing;
    request.example = id;
    request.n_terms = n_terms;
    return make_table(request);
}

PrintedValue parse_printed(std::string_view text) {
    PrintedValue out;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out.value);
    if (ec != std::errc{} || ptr != last) throw InvalidArgument("malformed number '" + std::string(text) + "'");

    const std::size_t e = text.find_first_of("eE");
    const std::string_view mantissa = text.substr(0, e);
    int exponent = 0;
    if (e != std::string_view::npos)
        std::from_chars(text.data() + e + 1 + (text[e + 1] == '+'), last, exponent);
    const std::size_t dot = mantissa.find('.');
    const int decimals = dot == std::string_view::npos ? 0 : static_cast<int>(mantissa.size() - dot - 1);
    out.last_digit = std::pow(10.0, exponent - decimals);
    return out;
}

std::span<const ReferenceRow> reference_table(ExampleId id) {
    static const ReferenceTable tables[4] = {
        build_reference(kRawExample1), build_reference(kRawExample2),
        build_reference(kRawExample3), build_reference(kRawExample4)};
    return tables[static_cast<int>(id) - 1];
}

std::vector<ScanRow> truncation_scan(ExampleId id, int n_max) {
    const auto reference = reference_table(id);
    const ProblemSpec base = builtin_problem(id, 1.0, 1.0, 1);
    constexpr double kUnavailable = std::numeric_limits<double>::infinity();

    std::vector<ScanRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        TableRequest request;
        request.ic = base.ic;
        request.forcing = base.forcing;
        request.example = id;
        request.n_terms = n;

        ScanRow row;
        row.n = n;
        for (std::size_t k = 0; k < kTableOrders.size(); ++k) {
            const auto cells = try_tabulate(request, kTableOrders[k]);
            const bool integer = kTableOrders[k].is_integer();
            for (std::size_t r = 0; r < reference.size(); ++r) {
                const ReferenceRow& ref = reference[r];
                if (!cells) {
                    (integer ? row.error_column : row.fractional_columns) = kUnavailable;
                    if (integer) row.integer_approx_column = kUnavailable;
                    continue;
                }
                const TableCell& cell = (*cells)[r];
                const double approx_dev = relative_deviation(cell.approx, ref.approx[k].value);
                if (integer) {
                    row.integer_approx_column = std::max(row.integer_approx_column, approx_dev);
                    row.error_column = std::max(
                        row.error_column, relative_deviation(*cell.abs_error, ref.abs_error.value));
                } else {
                    row.fractional_columns = std::max(row.fractional_columns, approx_dev);
                }
            }
        }
        row.max_deviation =
            std::max({row.error_column, row.integer_approx_column, row.fractional_columns});
        rows.push_back(row);
    }
    return rows;
}

int recovered_depth(std::span<const ScanRow> scan) {
    if (scan.empty()) throw InvalidArgument("empty truncation scan");
    const auto best = std::min_element(scan.begin(), scan.end(), [](const ScanRow& a, const ScanRow& b) {
        return a.error_column < b.error_column;
    });
    return best->n;
}

} // namespace fracadm
