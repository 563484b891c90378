#pragma once

#include <string>

#include "sgr/problem.hpp"

namespace sgr {

// CSV: fixed header, one row per iteration (k = 0 included), every float
// printed with 17 significant digits so identical runs are byte-identical.
// The wallclock column is deliberately absent from CSV; it lives in JSON.
std::string trace_to_csv(const Trace& trace);
void write_trace_csv(const Trace& trace, const std::string& path);
Trace read_trace_csv(const std::string& path);

// JSON: {"config": {...}, "rows": [...]} including wallclock.
std::string trace_to_json(const Trace& trace);
void write_trace_json(const Trace& trace, const std::string& path);

// Round-trip-exact float formatting (17 significant digits).
std::string format_double(double v);

}  // namespace sgr
