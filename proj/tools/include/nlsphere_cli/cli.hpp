#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nlsphere::cli {

enum class Command { Spectrum, Poisson, Evolve };
enum class Model { AllenCahn, Brusselator };

/// Built-in or file-based initial condition.
struct InitialCondition {
    enum class Kind { Cos10xy, Random, Equilibrium } kind = Kind::Cos10xy;
    int cap = 0;
    double scale = 0.0;
};

/// Parses "cos10xy", "equilibrium" or "random:<cap>:<scale>".
InitialCondition parse_initial_condition(const std::string& text);

struct RunConfig {
    Command command = Command::Spectrum;
    Model model = Model::AllenCahn;

    // Unset values take the model's default in resolve_defaults().
    std::optional<double> alpha, delta, epsilon, E, tau, f;
    std::optional<int> degree;
    std::optional<double> dt, t_final;
    std::string method = "hybrid";
    int switch_degree = 50;
    int cesaro_kappa = 0;
    std::uint64_t seed = 0;
    std::filesystem::path output_dir = "out";
    long snapshot_stride = 0;
    std::optional<std::string> ic;
    std::string rhs = "death-star";
    bool local = false;
    bool linear_decay = false;

    /// Fills every unset optional from the defaults of the command and model.
    void resolve_defaults();
    /// Throws nlsphere::DomainError when a value is out of range.
    void validate() const;
    long steps() const;
};

/// Executes a resolved, validated config. Progress goes to `log`.
/// Throws nlsphere::BlowUpError on numerical blow-up.
void run(const RunConfig& config, std::ostream& log);

/// Full command-line entry: parses, validates and runs. Returns 0 on success,
/// 1 on invalid input, 2 on numerical blow-up.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlsphere::cli
