#pragma once

// Command-line front end. Subcommands:
//
//   solve        evaluate the truncated series on a grid (or --dump-series)
//   table        tabulate over the reference order pairs
//   scan         compare depths 1..--terms against the reference table
//   dump-series  shorthand for `solve --dump-series`
//
// Exit codes: 0 success, 1 usage or parse error, 2 numeric or domain error.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fracadm/problems.hpp"

namespace fracadm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumeric = 2;

struct OutputOptions {
    char delimiter = ',';
    int digits = 17;
};

/// Header: y,x,alpha,beta,approx,exact,abs_error. Rows run over y, then x,
/// then order pair; exact and abs_error are empty where not available.
void write_table(const TableReport& report, const OutputOptions& options, std::ostream& out);

void write_scan(std::span<const ScanRow> scan, const OutputOptions& options, std::ostream& out);

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fracadm::cli
