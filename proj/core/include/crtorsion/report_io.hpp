#pragma once

#include <complex>
#include <string>
#include <vector>

#include "crtorsion/dynamics.hpp"
#include "crtorsion/trace_formula.hpp"

namespace crtorsion {

/// Formats with 17 significant digits; round-trips binary64 exactly and is
/// byte-stable across runs.
std::string format_double(double v);

/// IdentityReport <-> JSON (complex numbers as [re, im] pairs).
std::string report_to_json(const IdentityReport& r);
IdentityReport report_from_json(const std::string& text);

/// Aligned human-readable table for standard output.
std::string report_to_table(const IdentityReport& r);

/// Orbit table, CSV columns: kind,fiber,n,length,fuller_num,fuller_den,rtr.
std::string orbits_to_csv(const std::vector<OrbitClass>& orbits);
std::string orbits_to_json(const std::vector<OrbitClass>& orbits);

/// Kappa grid, CSV columns: re_s,im_s,re_kappa,im_kappa.
std::string kappa_grid_to_csv(const std::vector<std::complex<double>>& s_points,
                              const std::vector<std::complex<double>>& values);

/// Writes atomically (temp file in the target directory, then rename).
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace crtorsion
