#include "sgr/trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sgr {

namespace {

const char* kHeader =
    "k,objective,feasibility,smoothed_gap,tau,beta,gamma,"
    "feas_bound,obj_bound_lower,obj_bound_upper,restart,inner_warn";

double parse_cell(const std::string& s) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return kInf;
  if (s == "-inf") return -kInf;
  return std::stod(s);
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trace_to_csv(const Trace& trace) {
  std::ostringstream out;
  out << kHeader << "\n";
  for (const TraceRow& r : trace.rows) {
    out << r.k << ',' << format_double(r.objective) << ',' << format_double(r.feasibility)
        << ',' << format_double(r.smoothed_gap) << ',' << format_double(r.tau) << ','
        << format_double(r.beta) << ',' << format_double(r.gamma) << ','
        << format_double(r.feas_bound) << ',' << format_double(r.obj_bound_lower) << ','
        << format_double(r.obj_bound_upper) << ',' << (r.restart ? 1 : 0) << ','
        << (r.inner_warn ? 1 : 0) << "\n";
  }
  return out.str();
}

void write_trace_csv(const Trace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << trace_to_csv(trace);
}

Trace read_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty trace csv: " + path);
  if (line != kHeader) throw std::runtime_error("unexpected trace header in " + path);
  Trace t;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 12) throw std::runtime_error("bad trace row: " + line);
    TraceRow r;
    r.k = static_cast<std::size_t>(std::stoull(cells[0]));
    r.objective = parse_cell(cells[1]);
    r.feasibility = parse_cell(cells[2]);
    r.smoothed_gap = parse_cell(cells[3]);
    r.tau = parse_cell(cells[4]);
    r.beta = parse_cell(cells[5]);
    r.gamma = parse_cell(cells[6]);
    r.feas_bound = parse_cell(cells[7]);
    r.obj_bound_lower = parse_cell(cells[8]);
    r.obj_bound_upper = parse_cell(cells[9]);
    r.restart = cells[10] == "1";
    r.inner_warn = cells[11] == "1";
    t.rows.push_back(r);
  }
  t.bounds_available = false;
  for (const TraceRow& r : t.rows) {
    if (std::isfinite(r.feas_bound)) t.bounds_available = true;
  }
  return t;
}

std::string trace_to_json(const Trace& trace) {
  nlohmann::json cfg;
  cfg["algorithm"] = trace.algorithm;
  cfg["problem"] = trace.problem_label;
  for (const auto& [key, value] : trace.params) cfg[key] = value;

  nlohmann::json rows = nlohmann::json::array();
  for (const TraceRow& r : trace.rows) {
    nlohmann::json row;
    row["k"] = r.k;
    auto put = [&row](const char* key, double v) {
      if (std::isnan(v)) {
        row[key] = nullptr;
      } else {
        row[key] = v;
      }
    };
    put("objective", r.objective);
    put("feasibility", r.feasibility);
    put("smoothed_gap", r.smoothed_gap);
    put("tau", r.tau);
    put("beta", r.beta);
    put("gamma", r.gamma);
    put("feas_bound", r.feas_bound);
    put("obj_bound_lower", r.obj_bound_lower);
    put("obj_bound_upper", r.obj_bound_upper);
    row["restart"] = r.restart;
    row["inner_warn"] = r.inner_warn;
    row["wallclock"] = r.wallclock;
    rows.push_back(std::move(row));
  }
  nlohmann::json doc;
  doc["config"] = std::move(cfg);
  doc["rows"] = std::move(rows);
  return doc.dump(2);
}

void write_trace_json(const Trace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << trace_to_json(trace) << "\n";
}

}  // namespace sgr
