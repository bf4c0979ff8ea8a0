#include "nlsphere/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "nlsphere/errors.hpp"

namespace nlsphere {
namespace {

constexpr std::string_view coeff_magic = "# sht-coeffs v1 degree=";

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> fields;
    for (;;) {
        const auto comma = line.find(',');
        fields.push_back(trim(line.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        line.remove_prefix(comma + 1);
    }
    return fields;
}

bool starts_numeric(std::string_view s)
{
    s = trim(s);
    if (s.empty()) return false;
    const char c = s.front();
    return (c >= '0' && c <= '9') || c == '-' || c == '+' || c == '.' || c == 'n' || c == 'i';
}

}  // namespace

std::string format_double(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw DomainError("not a number: '" + std::string(text) + "'");
    return value;
}

void write_spectrum_csv(std::ostream& out, std::span<const double> lambda)
{
    out << "ell,lambda\n";
    for (std::size_t l = 0; l < lambda.size(); ++l) out << l << ',' << format_double(lambda[l]) << '\n';
}

std::vector<double> read_spectrum_csv(std::istream& in)
{
    std::vector<double> lambda;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#' || !starts_numeric(line)) continue;
        const auto fields = split(line);
        if (fields.size() != 2) throw ShapeError("spectrum rows need two columns: " + line);
        const double ell = parse_double(fields[0]);
        if (ell != static_cast<double>(lambda.size()))
            throw ShapeError("spectrum rows must list degrees 0, 1, 2, ... in order");
        lambda.push_back(parse_double(fields[1]));
    }
    return lambda;
}

void write_coeffs_csv(std::ostream& out, const SphHarmCoeffs& coeffs)
{
    out << coeff_magic << coeffs.degree() << '\n';
    for (int row = 0; row < coeffs.rows(); ++row) {
        for (int col = 0; col < coeffs.cols(); ++col) {
            if (col) out << ',';
            out << format_double(coeffs(row, col));
        }
        out << '\n';
    }
}

SphHarmCoeffs read_coeffs_csv(std::istream& in)
{
    std::string line;
    int degree = -1;
    while (std::getline(in, line)) {
        const std::string_view v = trim(line);
        if (v.starts_with(coeff_magic)) {
            degree = static_cast<int>(parse_double(v.substr(coeff_magic.size())));
            break;
        }
        if (!v.empty() && v.front() != '#') break;
    }
    if (degree < 0) throw ShapeError("missing '# sht-coeffs v1 degree=<n>' header");

    SphHarmCoeffs coeffs(degree);
    int row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty() || line.front() == '#') continue;
        if (row >= coeffs.rows()) throw ShapeError("too many coefficient rows");
        const auto fields = split(line);
        if (static_cast<int>(fields.size()) != coeffs.cols())
            throw ShapeError("coefficient row " + std::to_string(row) + " has " +
                             std::to_string(fields.size()) + " values, expected " +
                             std::to_string(coeffs.cols()));
        for (int col = 0; col < coeffs.cols(); ++col) coeffs(row, col) = parse_double(fields[col]);
        ++row;
    }
    if (row != coeffs.rows()) throw ShapeError("too few coefficient rows");
    return coeffs;
}

void write_grid_csv(std::ostream& out, const GridValues& values, const SphereGrid& grid)
{
    if (values.n_theta() != grid.n_theta() || values.n_phi() != grid.n_phi())
        throw ShapeError("grid values do not match the grid");
    const auto theta = grid.colatitudes();
    const auto phi = grid.longitudes();
    out << "theta,phi,value\n";
    for (int i = 0; i < values.n_theta(); ++i)
        for (int j = 0; j < values.n_phi(); ++j)
            out << format_double(theta[i]) << ',' << format_double(phi[j]) << ','
                << format_double(values(i, j)) << '\n';
}

void write_energy_csv(std::ostream& out, std::span<const std::pair<double, double>> series)
{
    out << "t,energy\n";
    for (const auto& [t, e] : series) out << format_double(t) << ',' << format_double(e) << '\n';
}

std::ofstream open_output(const std::filesystem::path& path)
{
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

std::ifstream open_input(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return in;
}

}  // namespace nlsphere
