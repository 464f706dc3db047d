#ifndef LPLAB_IO_HPP
#define LPLAB_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "lplab/grid_function.hpp"
#include "lplab/report.hpp"
#include "lplab/sets.hpp"

namespace lplab {

/// GridFunction on disk: <base>.json header (box, shape, optional s) plus
/// <base>.csv with the values flat in row-major node order.
void write_grid_function(const GridFunction& f, const std::string& base,
                         std::optional<double> s = std::nullopt);

struct LoadedFunction {
    GridFunction fn;
    std::optional<double> s;
};

LoadedFunction read_grid_function(const std::string& base);

/// Point clouds: one point per row (CSV) or {"dim": n, "points": [[...]]}.
void write_set_csv(const DiscreteSet& A, const std::string& path);
void write_set_json(const DiscreteSet& A, const std::string& path);

/// Reads either format, chosen by the file extension (.csv / .json).
DiscreteSet read_set(const std::string& path);

/// Support-value table: direction components, then the value.
void write_support_values(const std::vector<SupportValue>& table, const std::string& path);

void write_report_json(const VerificationReport& r, const std::string& path);
void write_reports_csv(const std::vector<VerificationReport>& rs, const std::string& path);

/// Per-node profile of a constructed function: node coordinates, value.
void write_profile_csv(const GridFunction& f, const std::string& path);

} // namespace lplab

#endif
