#include "nlsphere_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include <CLI11.hpp>

#include "nlsphere/errors.hpp"
#include "nlsphere/io.hpp"
#include "nlsphere/models.hpp"

namespace nlsphere::cli {
namespace {

constexpr double brusselator_random_scale = 1.0 / (std::numbers::pi * 100.0 * 100.0);

EvalMethod eval_method(const RunConfig& c)
{
    if (c.method == "rec") return EvalMethod::recurrence();
    if (c.method == "asy") return EvalMethod::asymptotic();
    return EvalMethod::hybrid(c.switch_degree);
}

Kernel kernel(const RunConfig& c)
{
    if (c.local) return LocalKernel{};
    return KernelParams(*c.alpha, *c.delta);
}

std::string padded(long step)
{
    std::string s = std::to_string(step);
    return std::string(s.size() < 6 ? 6 - s.size() : 0, '0') + s;
}

void write_coeffs(const std::filesystem::path& path, const SphHarmCoeffs& c)
{
    write_file(path, [&](std::ostream& out) { write_coeffs_csv(out, c); });
}

void write_grid(const std::filesystem::path& path, const SphHarmCoeffs& c, const SphereGrid& grid)
{
    const GridValues v = synthesis(c, grid);
    write_file(path, [&](std::ostream& out) { write_grid_csv(out, v, grid); });
}

void run_spectrum(const RunConfig& c, std::ostream& log)
{
    const std::vector<double> lambda = kernel_eigenvalues(kernel(c), *c.degree, eval_method(c));
    const auto path = c.output_dir / "spectrum.csv";
    write_file(path, [&](std::ostream& out) { write_spectrum_csv(out, lambda); });
    log << "wrote " << path.string() << " (" << lambda.size() << " eigenvalues)\n";
}

void run_poisson(const RunConfig& c, std::ostream& log)
{
    const int n = *c.degree;
    SphHarmCoeffs rhs(n);
    if (c.rhs == "death-star") {
        rhs = death_star_rhs(n);
    } else {
        auto in = open_input(c.rhs);
        rhs = read_coeffs_csv(in).resized(n);
    }
    const std::vector<double> lambda = kernel_eigenvalues(kernel(c), n, eval_method(c));
    const SphHarmCoeffs u = solve_poisson(PoissonProblem(rhs, lambda));
    const double residual = relative_l2_error(poisson_operator_apply(u, lambda), rhs);

    const SphereGrid grid(n);
    write_coeffs(c.output_dir / "rhs_coeffs.csv", rhs);
    write_coeffs(c.output_dir / "solution_coeffs.csv", u);
    write_grid(c.output_dir / "solution_grid.csv", u, grid);
    log << "relative residual " << format_double(residual) << '\n';
    log << "wrote solution_coeffs.csv, solution_grid.csv to " << c.output_dir.string() << '\n';
    if (!(residual <= 1e-12)) throw ConvergenceError("Poisson residual check failed");
}

Fields initial_fields(const RunConfig& c, const BrusselatorConfig& bc)
{
    const int n = *c.degree;
    const InitialCondition ic = parse_initial_condition(*c.ic);
    if (c.model == Model::AllenCahn) {
        switch (ic.kind) {
        case InitialCondition::Kind::Cos10xy: return Fields{cos10xy(n)};
        case InitialCondition::Kind::Random: return Fields{random_coeffs(ic.cap, n, ic.scale, c.seed)};
        case InitialCondition::Kind::Equilibrium:
            throw DomainError("the equilibrium initial condition is for the Brusselator");
        }
    }
    Fields eq = brusselator_equilibrium(n, bc);
    if (ic.kind == InitialCondition::Kind::Cos10xy)
        throw DomainError("cos10xy is an Allen-Cahn initial condition");
    if (ic.kind == InitialCondition::Kind::Random) {
        const Fields noise = random_fields(2, ic.cap, n, ic.scale, c.seed);
        for (int f = 0; f < 2; ++f)
            for (std::size_t k = 0; k < eq[f].data().size(); ++k) eq[f].data()[k] += noise[f].data()[k];
    }
    return eq;
}

void run_evolve(const RunConfig& c, std::ostream& log)
{
    const int n = *c.degree;
    const std::vector<double> lambda = kernel_eigenvalues(kernel(c), n, eval_method(c));
    const SphereGrid grid(n);
    const double h = *c.dt;
    const long steps = c.steps();

    BrusselatorConfig bc;
    std::vector<DiagonalOperator> ops;
    FieldsNonlinearity nonlinearity;
    std::vector<std::string> names;
    if (c.model == Model::AllenCahn) {
        ops.emplace_back(lambda, *c.epsilon * *c.epsilon);
        nonlinearity = allen_cahn_pseudospectral(grid);
        names = {"u"};
    } else {
        bc.E = *c.E;
        bc.epsilon = *c.epsilon;
        bc.tau = *c.tau;
        bc.f = *c.f;
        bc.linear_decay = c.linear_decay;
        ops = brusselator_operators(lambda, bc);
        nonlinearity = brusselator_pseudospectral(grid, bc);
        names = {"u", "v"};
    }
    const Fields initial = initial_fields(c, bc);

    std::vector<Observer> observers;
    if (c.snapshot_stride > 0) {
        observers.push_back({c.snapshot_stride, [&](long step, double, const Fields& u) {
                                 for (std::size_t f = 0; f < u.size(); ++f)
                                     write_coeffs(c.output_dir / ("snapshot_" + names[f] + "_" + padded(step) + ".csv"),
                                                  cesaro_apply(u[f], c.cesaro_kappa));
                             }});
    }
    std::vector<std::pair<double, double>> energy;
    std::optional<SphereGrid> egrid;
    if (c.model == Model::AllenCahn) {
        egrid.emplace(energy_grid(n));
        observers.push_back({1, [&](long, double t, const Fields& u) {
                                 energy.emplace_back(t, ginzburg_landau_energy(u[0], lambda, *c.epsilon, *egrid));
                             }});
    }

    auto write_energy = [&] {
        if (c.model == Model::AllenCahn)
            write_file(c.output_dir / "energy.csv", [&](std::ostream& out) { write_energy_csv(out, energy); });
    };
    Fields final_state;
    try {
        final_state = evolve(initial, ops, nonlinearity, h, steps, observers);
    } catch (const BlowUpError&) {
        write_energy();
        throw;
    }
    write_energy();
    for (std::size_t f = 0; f < final_state.size(); ++f) {
        write_coeffs(c.output_dir / ("final_" + names[f] + "_coeffs.csv"), final_state[f]);
        write_grid(c.output_dir / ("final_" + names[f] + "_grid.csv"), cesaro_apply(final_state[f], c.cesaro_kappa),
                   grid);
    }
    log << "evolved " << steps << " steps of " << format_double(h) << " to t=" << format_double(steps * h) << '\n';
    if (!energy.empty())
        log << "energy " << format_double(energy.front().second) << " -> " << format_double(energy.back().second)
            << '\n';
    log << "wrote results to " << c.output_dir.string() << '\n';
}

}  // namespace

InitialCondition parse_initial_condition(const std::string& text)
{
    if (text == "cos10xy") return {InitialCondition::Kind::Cos10xy, 0, 0.0};
    if (text == "equilibrium") return {InitialCondition::Kind::Equilibrium, 0, 0.0};
    const std::string prefix = "random:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string rest = text.substr(prefix.size());
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw DomainError("expected random:<cap>:<scale>, got " + text);
        const double cap = parse_double(rest.substr(0, colon));
        if (cap < 0 || cap != std::floor(cap)) throw DomainError("random cap must be a nonnegative integer");
        return {InitialCondition::Kind::Random, static_cast<int>(cap), parse_double(rest.substr(colon + 1))};
    }
    throw DomainError("unknown initial condition '" + text + "'");
}

void RunConfig::resolve_defaults()
{
    auto set = [](auto& opt, auto value) {
        if (!opt) opt = value;
    };
    switch (command) {
    case Command::Spectrum:
        set(alpha, -0.5);
        set(delta, 1.0);
        set(degree, 100);
        break;
    case Command::Poisson:
        set(alpha, 0.0);
        set(delta, 1.5);
        set(degree, 100);
        break;
    case Command::Evolve:
        if (model == Model::AllenCahn) {
            set(epsilon, 0.1);
            set(alpha, -0.5);
            set(delta, 1.0);
            set(degree, 63);
            set(dt, 0.1);
            set(t_final, 1.0);
            set(ic, std::string("cos10xy"));
        } else {
            set(E, 4.0);
            set(epsilon, 0.075);
            set(tau, 7.8125);
            set(f, 0.8);
            set(alpha, 0.0);
            set(delta, 1.0);
            set(degree, 399);
            set(dt, 0.1);
            set(t_final, 1.0);
            set(ic, "random:99:" + format_double(brusselator_random_scale));
        }
        break;
    }
}

void RunConfig::validate() const
{
    if (!local) KernelParams(alpha.value(), delta.value());
    if (degree.value() < 0) throw DomainError("degree must be nonnegative");
    if (method != "rec" && method != "asy" && method != "hybrid")
        throw DomainError("method must be rec, asy or hybrid");
    EvalMethod::hybrid(switch_degree);
    if (cesaro_kappa < 0) throw DomainError("cesaro-kappa must be nonnegative");
    if (snapshot_stride < 0) throw DomainError("snapshot-stride must be nonnegative");
    if (command != Command::Evolve) return;

    if (!(epsilon.value() > 0.0)) throw DomainError("epsilon must be positive");
    if (!(dt.value() > 0.0)) throw DomainError("dt must be positive");
    if (!(t_final.value() > 0.0)) throw DomainError("t-final must be positive");
    steps();
    const InitialCondition init = parse_initial_condition(ic.value());
    if (init.kind == InitialCondition::Kind::Random && init.cap > degree.value())
        throw DomainError("random cap exceeds the degree");
    if (model == Model::Brusselator) {
        BrusselatorConfig bc;
        bc.E = E.value();
        bc.epsilon = epsilon.value();
        bc.tau = tau.value();
        bc.f = f.value();
        bc.validate();
    }
}

long RunConfig::steps() const
{
    const double ratio = t_final.value() / dt.value();
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * rounded)
        throw DomainError("t-final must be a positive whole multiple of dt");
    return static_cast<long>(rounded);
}

void run(const RunConfig& config, std::ostream& log)
{
    switch (config.command) {
    case Command::Spectrum: run_spectrum(config, log); break;
    case Command::Poisson: run_poisson(config, log); break;
    case Command::Evolve: run_evolve(config, log); break;
    }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Spectral solver for nonlocal diffusion on the unit sphere"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_kernel = [&](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha, "kernel singularity strength in (-1, 1)");
        sub->add_option("--delta", cfg.delta, "horizon in (0, 2]");
        sub->add_flag("--local", cfg.local, "use the local Laplace-Beltrami operator");
        sub->add_option("--degree", cfg.degree, "maximum spherical harmonic degree n");
        sub->add_option("--method", cfg.method, "eigenvalue evaluation: rec, asy or hybrid")
            ->check(CLI::IsMember({"rec", "asy", "hybrid"}));
        sub->add_option("--switch-degree", cfg.switch_degree, "hybrid switch from recurrence to asymptotics");
        sub->add_option("--output-dir", cfg.output_dir, "directory for output files");
    };

    auto* spectrum = app.add_subcommand("spectrum", "write eigenvalues to spectrum.csv");
    add_kernel(spectrum);

    auto* poisson = app.add_subcommand("poisson", "solve L u = f with the mean condition");
    add_kernel(poisson);
    poisson->add_option("--rhs", cfg.rhs, "death-star or a coefficient file");

    auto* evolve = app.add_subcommand("evolve", "time evolution by ETDRK4");
    add_kernel(evolve);
    std::string model = "allen-cahn";
    evolve->add_option("--model", model, "allen-cahn or brusselator")
        ->check(CLI::IsMember({"allen-cahn", "brusselator"}));
    evolve->add_option("--epsilon", cfg.epsilon, "diffusion scale");
    evolve->add_option("--E", cfg.E, "Brusselator feed");
    evolve->add_option("--tau", cfg.tau, "Brusselator time scale");
    evolve->add_option("--f", cfg.f, "Brusselator coupling in (0, 1)");
    evolve->add_option("--dt", cfg.dt, "time step");
    evolve->add_option("--t-final", cfg.t_final, "final time (a multiple of dt)");
    evolve->add_option("--ic", cfg.ic, "cos10xy, random:<cap>:<scale> or equilibrium");
    evolve->add_option("--seed", cfg.seed, "seed for random initial conditions");
    evolve->add_option("--snapshot-stride", cfg.snapshot_stride, "write coefficients every k steps (0: never)");
    evolve->add_option("--cesaro-kappa", cfg.cesaro_kappa, "Cesaro order applied to written fields (0: off)");
    evolve->add_flag("--linear-decay", cfg.linear_decay, "treat the Brusselator -u term as linear");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    if (spectrum->parsed()) cfg.command = Command::Spectrum;
    if (poisson->parsed()) cfg.command = Command::Poisson;
    if (evolve->parsed()) {
        cfg.command = Command::Evolve;
        cfg.model = model == "brusselator" ? Model::Brusselator : Model::AllenCahn;
    }

    try {
        cfg.resolve_defaults();
        cfg.validate();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    try {
        run(cfg, out);
    } catch (const BlowUpError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace nlsphere::cli
