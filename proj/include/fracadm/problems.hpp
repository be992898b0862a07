#pragma once

// Catalogue of the four benchmark problems with closed-form solutions, the
// published reference tables, and table generation.
//
//   1: D_y^a u + u D_x^b u = x,  u(x,0) = 1      exact x tanh y + sech y
//   2: D_y^a u + u D_x^b u = 1,  u(x,0) = -x     exact (2x - 2y + y^2) / (2(y - 1))
//   3: D_y^a u + u D_x^b u = 0,  u(x,0) = 1 + x  exact (1 + x) / (1 + y)
//   4: D_y^a u + u D_x^b u = 0,  u(x,0) = x      exact x / (1 + y)
//
// The closed forms hold for a = b = 1.

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fracadm/adomian.hpp"

namespace fracadm {

enum class ExampleId { One = 1, Two = 2, Three = 3, Four = 4 };

inline constexpr std::array<ExampleId, 4> kAllExamples = {ExampleId::One, ExampleId::Two,
                                                          ExampleId::Three, ExampleId::Four};

/// Throws InvalidArgument unless 1 <= id <= 4.
ExampleId example_from_int(int id);

ProblemSpec builtin_problem(ExampleId id, double alpha, double beta, int n_terms);

/// Closed-form solution at integer orders. Throws DomainError at the
/// singular line (y = 1 for example 2, y = -1 otherwise).
double exact_solution(ExampleId id, double x, double y);
long double exact_solution_extended(ExampleId id, long double x, long double y);

struct OrderPair {
    double alpha = 1.0;
    double beta = 1.0;
    bool is_integer() const noexcept { return alpha == 1.0 && beta == 1.0; }
};

inline constexpr std::array<double, 3> kTableY = {0.01, 0.05, 0.1};
inline constexpr std::array<double, 3> kTableX = {0.3, 0.6, 0.9};
inline constexpr std::array<OrderPair, 3> kTableOrders = {
    OrderPair{0.5, 0.5}, OrderPair{0.75, 0.75}, OrderPair{1.0, 1.0}};

struct TableCell {
    double approx = 0.0;
    std::optional<double> exact;
    std::optional<double> abs_error;
};

/// Cells are stored pair-major, then y, then x. exact and abs_error are set
/// only for the (1, 1) pair of a catalogue problem. Series and closed form are
/// both evaluated in extended precision; abs_error is their difference rounded
/// once, so it resolves errors far below the spacing of the rounded values.
struct TableReport {
    std::optional<ExampleId> example;
    std::vector<OrderPair> order_pairs;
    std::vector<double> y_values;
    std::vector<double> x_values;
    int n_terms = 0;
    std::vector<TableCell> cells;

    const TableCell& cell(std::size_t pair, std::size_t yi, std::size_t xi) const;
};

struct TableRequest {
    Series ic;
    Series forcing;
    std::optional<ExampleId> example; ///< enables the exact column
    std::vector<OrderPair> order_pairs{kTableOrders.begin(), kTableOrders.end()};
    std::vector<double> y_values{kTableY.begin(), kTableY.end()};
    std::vector<double> x_values{kTableX.begin(), kTableX.end()};
    int n_terms = 6;
    std::size_t term_cap = kDefaultTermCap;
};

TableReport make_table(const TableRequest& request);
/// Catalogue problem on the reference grid and order pairs.
TableReport make_table(ExampleId id, int n_terms);

/// A number as printed in a reference table: its value and the magnitude of
/// one unit in its last printed digit.
struct PrintedValue {
    double value = 0.0;
    double last_digit = 0.0;
};

PrintedValue parse_printed(std::string_view text);

/// One row of a published reference table.
struct ReferenceRow {
    double y;
    double x;
    std::array<PrintedValue, 3> approx; ///< one per kTableOrders entry
    PrintedValue exact;
    PrintedValue abs_error;
};

/// Published approximate, exact and error values for a catalogue problem on
/// the kTableY x kTableX grid, ordered by y then x.
std::span<const ReferenceRow> reference_table(ExampleId id);

struct ScanRow {
    int n = 0;
    double error_column = 0.0;          ///< max relative deviation, (1,1) errors
    double integer_approx_column = 0.0; ///< max relative deviation, (1,1) approx
    double fractional_columns = 0.0;    ///< max relative deviation, other pairs
    double max_deviation = 0.0;         ///< max of the three

    friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

/// Compares make_table(id, n) to the reference table for n = 1..n_max.
/// Pairs that fail to solve at some depth report an infinite deviation.
std::vector<ScanRow> truncation_scan(ExampleId id, int n_max);

/// Depth with the smallest error-column deviation (smallest n on ties).
int recovered_depth(std::span<const ScanRow> scan);

} // namespace fracadm
