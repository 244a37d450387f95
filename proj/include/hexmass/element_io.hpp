#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hexmass/hex8.hpp"

// Element file input/output. Format: a JSON object
//   {"id": string, "nodes": [[x,y,z] x8], "densities": [rho x8]}
// where "densities" is optional and defaults to (1,1,1,1,2,2,2,2).
// A multi-element file is a JSON array of such objects.

namespace hexmass {

struct ElementRecord {
    ElementGeometry geometry;
    NodalDensities densities;
    std::string id;
};

/// Malformed JSON or a field of the wrong type.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structurally valid JSON with the wrong shape (node count, missing keys).
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element fails the J0 > 0 check or has non-positive densities.
struct ValidityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Default densities used when a file omits them.
NodalDensities default_densities();

/// Reads a single-element file. A one-element array is accepted.
ElementRecord read_element(const std::string& path);

/// Reads a single- or multi-element file.
std::vector<ElementRecord> read_elements(const std::string& path);

void write_element(const ElementRecord& rec, const std::string& path);
void write_elements(const std::vector<ElementRecord>& recs, const std::string& path);

}  // namespace hexmass
