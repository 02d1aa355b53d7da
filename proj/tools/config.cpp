#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "experiment.hpp"

namespace rfl::app {

namespace {

struct ModeEntry {
    Mode mode;
    std::string_view name;
};

constexpr ModeEntry kModes[] = {
    {Mode::Verify, "verify"},        {Mode::Bandwidth, "bandwidth"},
    {Mode::Bernstein, "bernstein"},  {Mode::ExpType, "exp-type"},
    {Mode::RadialPw, "radial-pw"},   {Mode::Lks, "lks"},
    {Mode::Evolve, "evolve"},        {Mode::KernelCompare, "kernel-compare"},
    {Mode::DumpSymbol, "dump-symbol"},
};

const std::vector<std::string> kSymbols = {"dirac",     "riesz-derivative", "hilbert",      "riesz-j",
                                           "chi-plus",  "chi-minus",        "h-theta",      "riesz-feller",
                                           "riesz-feller-power", "semigroup", "cauchy"};

bool uses_radius(Mode mode) {
    return mode != Mode::KernelCompare && mode != Mode::DumpSymbol;
}

bool negative_x0_allowed_by(Mode mode) { return mode == Mode::Evolve || mode == Mode::ExpType; }

std::string format_double(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

template <class T>
T get_as(const nlohmann::json& j, const std::string& key) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InputError("config key '" + key + "' has the wrong type");
    }
}

double parse_p(const nlohmann::json& v) {
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "inf" || s == "infinity") return kInfinityNorm;
        throw InputError("config key 'p' must be a number or \"inf\"");
    }
    return get_as<double>(v, "p");
}

}  // namespace

std::string_view mode_name(Mode mode) {
    for (const auto& e : kModes) {
        if (e.mode == mode) return e.name;
    }
    return "unknown";
}

std::optional<Mode> parse_mode(std::string_view name) {
    for (const auto& e : kModes) {
        if (e.name == name) return e.mode;
    }
    return std::nullopt;
}

const std::vector<Mode>& all_modes() {
    static const std::vector<Mode> modes = [] {
        std::vector<Mode> v;
        for (const auto& e : kModes) v.push_back(e.mode);
        return v;
    }();
    return modes;
}

GridSpec ExperimentConfig::grid_spec() const { return GridSpec::uniform(n, grid, spacing); }

FellerParams ExperimentConfig::feller() const { return FellerParams(alpha, theta); }

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {"n",   "grid", "spacing", "alpha",  "theta", "p",      "R",
                                                  "eps", "kmax", "x0",      "seed",   "out",   "format", "m",
                                                  "trials", "symbol", "axis", "entire", "timing"};
    return keys;
}

ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base) {
    if (!j.is_object()) throw InputError("config file must hold a JSON object");
    std::vector<std::string> unknown;
    for (const auto& [key, value] : j.items()) {
        const auto& keys = config_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) unknown.push_back(key);
    }
    if (!unknown.empty()) {
        std::string msg = "unknown config keys:";
        for (const auto& k : unknown) msg += " " + k;
        throw InputError(msg);
    }
    ExperimentConfig c = base;
    for (const auto& [key, v] : j.items()) {
        if (key == "n") c.n = get_as<int>(v, key);
        else if (key == "grid") c.grid = get_as<int>(v, key);
        else if (key == "spacing") c.spacing = get_as<double>(v, key);
        else if (key == "alpha") c.alpha = get_as<double>(v, key);
        else if (key == "theta") c.theta = get_as<double>(v, key);
        else if (key == "p") c.p = parse_p(v);
        else if (key == "R") c.radius = get_as<double>(v, key);
        else if (key == "eps") c.epsilon = get_as<double>(v, key);
        else if (key == "kmax") c.k_max = get_as<int>(v, key);
        else if (key == "x0") c.x0 = v.is_array() ? get_as<std::vector<double>>(v, key) : std::vector<double>{get_as<double>(v, key)};
        else if (key == "seed") c.seed = get_as<std::uint64_t>(v, key);
        else if (key == "out") c.out = get_as<std::string>(v, key);
        else if (key == "format") c.format = get_as<std::string>(v, key);
        else if (key == "m") c.m = get_as<int>(v, key);
        else if (key == "trials") c.trials = get_as<int>(v, key);
        else if (key == "symbol") c.symbol = get_as<std::string>(v, key);
        else if (key == "axis") c.axis = get_as<int>(v, key);
        else if (key == "entire") c.entire = get_as<bool>(v, key);
        else if (key == "timing") c.timing = get_as<bool>(v, key);
    }
    return c;
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
    nlohmann::json j;
    j["mode"] = std::string(mode_name(c.mode));
    j["n"] = c.n;
    j["grid"] = c.grid;
    j["spacing"] = c.spacing;
    j["alpha"] = c.alpha;
    j["theta"] = c.theta;
    j["p"] = std::isinf(c.p) ? nlohmann::json("inf") : nlohmann::json(c.p);
    j["R"] = c.radius;
    j["eps"] = c.epsilon;
    j["kmax"] = c.k_max;
    j["x0"] = c.x0;
    j["seed"] = c.seed;
    j["format"] = c.format;
    switch (c.mode) {
        case Mode::RadialPw: j["m"] = c.m; break;
        case Mode::Lks: j["trials"] = c.trials; break;
        case Mode::DumpSymbol:
            j["symbol"] = c.symbol;
            j["axis"] = c.axis;
            break;
        case Mode::ExpType: j["entire"] = c.entire; break;
        case Mode::Evolve: j["timing"] = c.timing; break;
        default: break;
    }
    return j;
}

void resolve_defaults(ExperimentConfig& c) {
    if (c.grid == 0) c.grid = c.n <= 2 ? 64 : (c.n == 3 ? 32 : 16);
    if (c.k_max == 0) {
        switch (c.mode) {
            case Mode::Bandwidth: c.k_max = 64; break;
            case Mode::RadialPw: c.k_max = 48; break;
            case Mode::DumpSymbol: c.k_max = 1; break;
            default: c.k_max = 32; break;
        }
    }
    if (c.x0.empty()) {
        const bool negative_ok = c.alpha > 0.0 && std::abs(1.0 - c.theta) < c.alpha / 2.0;
        switch (c.mode) {
            case Mode::Evolve: c.x0 = {0.0, 0.1, 0.5, 1.0}; break;
            case Mode::ExpType:
                c.x0 = negative_ok ? std::vector<double>{-1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0}
                                   : std::vector<double>{0.0, 0.25, 0.5, 1.0};
                break;
            case Mode::KernelCompare: c.x0 = {0.5, 1.0}; break;
            case Mode::DumpSymbol: c.x0 = {1.0}; break;
            default: break;
        }
    }
}

void validate(const ExperimentConfig& c) {
    if (c.n < 1 || c.n > 6) throw InputError("n must lie in [1, 6]");
    if (c.grid < 4 || c.grid % 2 != 0) throw InputError("grid must be an even integer >= 4");
    if (!(c.spacing > 0.0) || !std::isfinite(c.spacing)) throw InputError("spacing must be a positive number");
    const double values = std::pow(static_cast<double>(c.grid), c.n) * std::ldexp(1.0, c.n);
    if (values > std::ldexp(1.0, 24)) {
        throw InputError("grid^n * 2^n exceeds 2^24 coefficients; reduce grid or n");
    }
    if (!(c.alpha > 0.0 && c.alpha <= 1.0)) {
        throw InputError("alpha = " + format_double(c.alpha) + " violates 0 < alpha <= 1");
    }
    if (!std::isfinite(c.theta)) throw InputError("theta must be finite");
    if (!(c.p > 1.0)) throw InputError("p must satisfy p > 1 (p = inf allowed)");
    if (c.format != "csv" && c.format != "json") throw InputError("format must be csv or json");
    if (c.k_max < 1) throw InputError("kmax must be >= 1");
    if (c.m < 0) throw InputError("m must be >= 0");
    if (c.trials < 1) throw InputError("trials must be >= 1");
    if (!(c.epsilon > 0.0)) throw InputError("eps must be > 0");

    const double nyquist = M_PI / c.spacing;
    if (uses_radius(c.mode)) {
        if (!(c.radius > 0.0)) throw InputError("R must be > 0");
        const double needed = c.mode == Mode::RadialPw ? c.radius + c.epsilon : c.radius;
        if (needed > nyquist) {
            throw InputError("R" + std::string(c.mode == Mode::RadialPw ? " + eps" : "") + " = " +
                             format_double(needed) + " exceeds the Nyquist radius pi/spacing = " +
                             format_double(nyquist));
        }
    }
    for (double x0 : c.x0) {
        if (!std::isfinite(x0)) throw InputError("x0 entries must be finite");
    }
    const bool any_negative = std::any_of(c.x0.begin(), c.x0.end(), [](double v) { return v < 0.0; });
    if (negative_x0_allowed_by(c.mode) && any_negative && !(std::abs(1.0 - c.theta) < c.alpha / 2.0)) {
        throw InputError("theta = " + format_double(c.theta) + " with alpha = " + format_double(c.alpha) +
                         " is not admissible for x0 < 0: requires |1 - theta| < alpha/2");
    }
    if (c.mode == Mode::KernelCompare) {
        if (c.n > 3) throw InputError("kernel-compare supports n <= 3");
        for (double t : c.x0) {
            if (t == 0.0) throw InputError("kernel-compare needs nonzero times (x0 entries)");
        }
    }
    if (c.mode == Mode::DumpSymbol) {
        if (std::find(kSymbols.begin(), kSymbols.end(), c.symbol) == kSymbols.end()) {
            std::string msg = "unknown symbol '" + c.symbol + "'; choose one of:";
            for (const auto& s : kSymbols) msg += " " + s;
            throw InputError(msg);
        }
        if (c.axis < 1 || c.axis > c.n) throw InputError("axis must lie in [1, n]");
        if (c.symbol == "cauchy" && c.x0.front() < 0.0 && !(std::abs(1.0 - c.theta) < c.alpha / 2.0)) {
            throw InputError("theta = " + format_double(c.theta) +
                             " is not admissible for x0 < 0: requires |1 - theta| < alpha/2");
        }
        if (c.symbol == "semigroup" && c.x0.front() < 0.0) throw InputError("semigroup time x0 must be >= 0");
    }
}

nlohmann::json number(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

std::string to_csv(const Table& table) {
    std::ostringstream os;
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            const auto& cell = row[i];
            if (cell.is_null()) continue;
            if (cell.is_boolean()) os << (cell.get<bool>() ? "true" : "false");
            else if (cell.is_number_integer()) os << cell.get<long long>();
            else if (cell.is_number()) os << format_double(cell.get<double>());
            else os << cell.get<std::string>();
        }
        os << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["version"] = std::string(kVersion);
    j["config"] = report.config;
    j["summary"] = report.summary;
    j["pass"] = report.pass;
    j["columns"] = report.table.columns;
    j["rows"] = report.table.rows;
    return j;
}

void emit(const ExperimentReport& report, const ExperimentConfig& config, std::ostream& os) {
    const std::string csv = to_csv(report.table);
    const std::string json = to_json(report).dump(2) + "\n";
    if (!config.out.empty()) {
        for (const auto& [path, text] : {std::pair{config.out + ".csv", &csv}, std::pair{config.out + ".json", &json}}) {
            std::ofstream file(path, std::ios::binary);
            if (!file) throw IoError("cannot open " + path + " for writing");
            file << *text;
            if (!file) throw IoError("failed writing " + path);
        }
    }
    os << (config.format == "json" ? json : csv);
    if (!os) throw IoError("failed writing the report to standard output");
}

}  // namespace rfl::app
