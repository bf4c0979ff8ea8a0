#pragma once

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <stdexcept>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nlsphere/sht.hpp"

namespace nlsphere {

/// 17 significant digits; parses back to the same double.
std::string format_double(double value);
double parse_double(std::string_view text);

/// `ell,lambda` then one row per degree.
void write_spectrum_csv(std::ostream& out, std::span<const double> lambda);
std::vector<double> read_spectrum_csv(std::istream& in);

/// `# sht-coeffs v1 degree=<n>` then n+1 rows of 2n+1 values (layout of SphHarmCoeffs).
void write_coeffs_csv(std::ostream& out, const SphHarmCoeffs& coeffs);
SphHarmCoeffs read_coeffs_csv(std::istream& in);

/// `theta,phi,value`, colatitude-major.
void write_grid_csv(std::ostream& out, const GridValues& values, const SphereGrid& grid);

/// `t,energy`.
void write_energy_csv(std::ostream& out, std::span<const std::pair<double, double>> series);

std::ofstream open_output(const std::filesystem::path& path);
std::ifstream open_input(const std::filesystem::path& path);

/// Opens `path` for writing (creating parent directories) and hands the stream to fn.
template <typename Fn>
void write_file(const std::filesystem::path& path, Fn&& fn)
{
    auto out = open_output(path);
    fn(out);
    out.close();
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace nlsphere

