#include "rfl/field_io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace rfl {

namespace {

constexpr std::array<char, 4> kMagic{'R', 'F', 'L', 'F'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xffu);
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64(std::ostream& os, double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xffu);
    os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    if (!is.read(reinterpret_cast<char*>(b), 4)) throw std::runtime_error("field binary: truncated input");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

double get_f64(std::istream& is) {
    unsigned char b[8];
    if (!is.read(reinterpret_cast<char*>(b), 8)) throw std::runtime_error("field binary: truncated input");
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return std::bit_cast<double>(bits);
}

template <class F>
void write_body(std::ostream& os, const F& f, std::uint32_t domain) {
    os.write(kMagic.data(), kMagic.size());
    put_u32(os, kVersion);
    put_u32(os, domain);
    const GridSpec& g = f.grid();
    put_u32(os, static_cast<std::uint32_t>(g.n()));
    for (int s : g.sizes()) put_u32(os, static_cast<std::uint32_t>(s));
    for (double h : g.spacing()) put_f64(os, h);
    put_u32(os, static_cast<std::uint32_t>(f.signature().n()));
    for (std::size_t q = 0; q < f.point_count(); ++q) {
        for (BladeIndex a = 0; a < f.blade_count(); ++a) {
            const Complex c = f.component(a)[q];
            put_f64(os, c.real());
            put_f64(os, c.imag());
        }
    }
}

template <class F>
F read_values(std::istream& is, GridSpec grid, AlgebraSignature sig) {
    F f(std::move(grid), sig);
    for (std::size_t q = 0; q < f.point_count(); ++q) {
        for (BladeIndex a = 0; a < f.blade_count(); ++a) {
            const double re = get_f64(is);
            const double im = get_f64(is);
            f.component(a)[q] = Complex(re, im);
        }
    }
    return f;
}

template <class F>
nlohmann::json json_body(const F& f, const char* domain) {
    nlohmann::json values = nlohmann::json::array();
    for (std::size_t q = 0; q < f.point_count(); ++q) {
        for (BladeIndex a = 0; a < f.blade_count(); ++a) {
            const Complex c = f.component(a)[q];
            values.push_back({c.real(), c.imag()});
        }
    }
    return {{"format", "rfl-field"},  {"version", kVersion},          {"domain", domain},
            {"grid", grid_to_json(f.grid())}, {"algebra_n", f.signature().n()}, {"values", std::move(values)}};
}

template <class F>
F json_values(const nlohmann::json& values, GridSpec grid, AlgebraSignature sig) {
    F f(std::move(grid), sig);
    if (!values.is_array() || values.size() != f.point_count() * f.blade_count()) {
        throw std::runtime_error("field json: value count does not match the grid");
    }
    std::size_t i = 0;
    for (std::size_t q = 0; q < f.point_count(); ++q) {
        for (BladeIndex a = 0; a < f.blade_count(); ++a, ++i) {
            const auto& pair = values[i];
            f.component(a)[q] = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
        }
    }
    return f;
}

}  // namespace

nlohmann::json grid_to_json(const GridSpec& grid) {
    return {{"n", grid.n()}, {"sizes", grid.sizes()}, {"spacing", grid.spacing()}};
}

void write_field_binary(std::ostream& os, const AnyField& field) {
    if (const auto* f = std::get_if<CliffordField>(&field)) {
        write_body(os, *f, 0);
    } else {
        write_body(os, std::get<SpectralField>(field), 1);
    }
}

AnyField read_field_binary(std::istream& is) {
    std::array<char, 4> magic{};
    if (!is.read(magic.data(), magic.size()) || magic != kMagic) {
        throw std::runtime_error("field binary: bad magic");
    }
    if (get_u32(is) != kVersion) throw std::runtime_error("field binary: unsupported version");
    const std::uint32_t domain = get_u32(is);
    if (domain > 1) throw std::runtime_error("field binary: unknown domain tag");
    const std::uint32_t n = get_u32(is);
    if (n < 1 || n > static_cast<std::uint32_t>(AlgebraSignature::kMaxGenerators)) {
        throw std::runtime_error("field binary: bad dimension");
    }
    std::vector<int> sizes(n);
    std::vector<double> spacing(n);
    for (auto& s : sizes) s = static_cast<int>(get_u32(is));
    for (auto& h : spacing) h = get_f64(is);
    const auto algebra_n = static_cast<int>(get_u32(is));
    try {
        GridSpec grid(sizes, spacing);
        const AlgebraSignature sig(algebra_n);
        if (domain == 0) return read_values<CliffordField>(is, std::move(grid), sig);
        return read_values<SpectralField>(is, std::move(grid), sig);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("field binary: ") + e.what());
    }
}

nlohmann::json field_to_json(const AnyField& field) {
    if (const auto* f = std::get_if<CliffordField>(&field)) return json_body(*f, "space");
    return json_body(std::get<SpectralField>(field), "frequency");
}

AnyField field_from_json(const nlohmann::json& j) {
    try {
        if (j.at("format") != "rfl-field") throw std::runtime_error("field json: unknown format tag");
        const auto& g = j.at("grid");
        GridSpec grid(g.at("sizes").get<std::vector<int>>(), g.at("spacing").get<std::vector<double>>());
        const AlgebraSignature sig(j.at("algebra_n").get<int>());
        const auto domain = j.at("domain").get<std::string>();
        if (domain == "space") return json_values<CliffordField>(j.at("values"), std::move(grid), sig);
        if (domain == "frequency") return json_values<SpectralField>(j.at("values"), std::move(grid), sig);
        throw std::runtime_error("field json: unknown domain '" + domain + "'");
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("field json: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("field json: ") + e.what());
    }
}

}  // namespace rfl
