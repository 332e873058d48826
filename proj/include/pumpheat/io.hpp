#pragma once

#include <filesystem>
#include <string>

#include "pumpheat/kernel.hpp"
#include "pumpheat/pump_solver.hpp"

namespace pumpheat {

// "%.17g": enough digits to round-trip any binary64 value.
std::string format_full(double v);

// Writes content via a temp file in the same directory plus rename, in
// binary mode (LF endings as written).
void atomic_write(const std::filesystem::path& path, const std::string& content);

// Kernel export: header "s,n=0,n=1,...", one row per s.
std::string kernel_csv(const ScatteringKernel& k);
// Sidecar: {eta, n_max, quad_order, max_leakage}.
std::string kernel_sidecar_json(const ScatteringKernel& k);

// Distribution export: (s, probability) rows.
std::string distribution_csv(const PumpDistribution& d);
// Sidecar: {eta, p_e, n0, n_max, leakage, method, delta_E, sigma2_E}.
std::string distribution_sidecar_json(const PumpDistribution& d,
                                      const MomentReport& r);

// foo.csv -> foo.json (appends .json when the path has no .csv suffix).
std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

}  // namespace pumpheat
