#pragma once

// Field serialization.
//
// Binary layout (all integers uint32, all reals IEEE-754 float64, little-endian):
//   magic "RFLF" | version (=1) | domain (0 space, 1 frequency) | n
//   | sizes[n] | spacing[n] | algebra generator count
//   | point-major coefficients: for each lattice point in row-major order,
//     for each blade index 0..2^n-1, (re, im).
//
// JSON layout:
//   {"format": "rfl-field", "version": 1, "domain": "space"|"frequency",
//    "grid": {"n": .., "sizes": [..], "spacing": [..]}, "algebra_n": ..,
//    "values": [[re, im], ...]}   // same point-major order as the binary form

#include <iosfwd>
#include <variant>

#include "json.hpp"
#include "rfl/grid.hpp"

namespace rfl {

using AnyField = std::variant<CliffordField, SpectralField>;

void write_field_binary(std::ostream& os, const AnyField& field);
/// Throws std::runtime_error on malformed input.
AnyField read_field_binary(std::istream& is);

nlohmann::json field_to_json(const AnyField& field);
AnyField field_from_json(const nlohmann::json& j);

nlohmann::json grid_to_json(const GridSpec& grid);

}  // namespace rfl
