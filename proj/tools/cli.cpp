#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "experiment.hpp"

namespace rfl::app {

namespace {

nlohmann::json read_config_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw IoError("cannot read config file " + path);
    try {
        return nlohmann::json::parse(file);
    } catch (const nlohmann::json::parse_error& e) {
        if (file.bad()) throw IoError("cannot read config file " + path);
        throw InputError("malformed config file " + path + ": " + e.what());
    }
}

std::string description(Mode mode) {
    switch (mode) {
        case Mode::Verify: return "run the full invariant suite";
        case Mode::Bandwidth: return "spectral radius estimate a_k from operator powers";
        case Mode::Bernstein: return "Bernstein ratios of the Hardy parts against R^alpha";
        case Mode::ExpType: return "exponential type of the Cauchy extension over x0";
        case Mode::RadialPw: return "radial Paley-Wiener growth on an Urysohn bump";
        case Mode::Lks: return "Landau-Kolmogorov-Stein inequality on random fields";
        case Mode::Evolve: return "Cauchy problem solution, residual and kernel check";
        case Mode::KernelCompare: return "lattice kernels against the alpha = 1 closed forms";
        case Mode::DumpSymbol: return "nonzero coefficients of an operator symbol";
    }
    return {};
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Riesz-Feller Clifford lab: numerical experiments on Paley-Wiener theory", "rfl-lab"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    ExperimentConfig flags;
    std::string p_text, config_path;
    std::vector<double> x0;

    app.add_option("--n", flags.n, "dimension of R^n (1..6)");
    app.add_option("--grid", flags.grid, "samples per axis");
    app.add_option("--spacing", flags.spacing, "lattice spacing h");
    app.add_option("--alpha", flags.alpha, "order, 0 < alpha <= 1");
    app.add_option("--theta", flags.theta, "skewness");
    app.add_option("--p", p_text, "Lebesgue exponent (> 1, or inf)");
    app.add_option("--R", flags.radius, "spectral radius of the test field");
    app.add_option("--eps", flags.epsilon, "Urysohn collar width");
    app.add_option("--kmax", flags.k_max, "largest operator power");
    app.add_option("--x0", x0, "evolution times (repeatable, comma separated)")->delimiter(',');
    app.add_option("--seed", flags.seed, "random seed");
    app.add_option("--out", flags.out, "output prefix for <out>.csv and <out>.json");
    app.add_option("--config", config_path, "JSON config file; flags override its keys");
    app.add_option("--format", flags.format, "stdout format: csv or json");
    app.add_option("--m", flags.m, "radial weight exponent");
    app.add_option("--trials", flags.trials, "LKS sample count");
    app.add_option("--symbol", flags.symbol, "dump-symbol operator name");
    app.add_option("--axis", flags.axis, "dump-symbol Riesz axis");
    app.add_flag("--entire", flags.entire, "exp-type: use the entire extension");
    app.add_flag("--timing", flags.timing, "evolve: record wall time");

    for (Mode mode : all_modes()) app.add_subcommand(std::string(mode_name(mode)), description(mode))->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitInvalidInput;
    }

    try {
        ExperimentConfig config;
        if (!config_path.empty()) config = config_from_json(read_config_file(config_path));
        auto given = [&](const char* name) { return app.count(name) > 0; };
        if (given("--n")) config.n = flags.n;
        if (given("--grid")) config.grid = flags.grid;
        if (given("--spacing")) config.spacing = flags.spacing;
        if (given("--alpha")) config.alpha = flags.alpha;
        if (given("--theta")) config.theta = flags.theta;
        if (given("--p")) config = config_from_json({{"p", p_text == "inf" ? nlohmann::json("inf") : nlohmann::json::parse(p_text, nullptr, false)}}, config);
        if (given("--R")) config.radius = flags.radius;
        if (given("--eps")) config.epsilon = flags.epsilon;
        if (given("--kmax")) config.k_max = flags.k_max;
        if (given("--x0")) config.x0 = x0;
        if (given("--seed")) config.seed = flags.seed;
        if (given("--out")) config.out = flags.out;
        if (given("--format")) config.format = flags.format;
        if (given("--m")) config.m = flags.m;
        if (given("--trials")) config.trials = flags.trials;
        if (given("--symbol")) config.symbol = flags.symbol;
        if (given("--axis")) config.axis = flags.axis;
        if (given("--entire")) config.entire = flags.entire;
        if (given("--timing")) config.timing = flags.timing;
        for (Mode mode : all_modes()) {
            if (app.got_subcommand(std::string(mode_name(mode)))) config.mode = mode;
        }
        resolve_defaults(config);
        validate(config);
        const auto report = run(config);
        emit(report, config, out);
        return report.pass ? kExitPass : kExitViolation;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}

}  // namespace rfl::app
