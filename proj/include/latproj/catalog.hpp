#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latproj/matrix.hpp"

namespace latproj {

/// Named Gram matrix with a provenance note.
struct CatalogEntry {
  std::string name;
  Mat gram;
  std::string notes;
};

/// Built-in lattice catalog.  Names: "Z<d>" for the cubic lattice of any
/// dimension, plus A2, D3, D3*, D4, E8, Leech, 5_1, 2Z+Z.  Lookup is
/// case-insensitive.
std::optional<CatalogEntry> catalog_lookup(const std::string& name);

/// The fixed (non-parametric) entries, for listings.
std::vector<CatalogEntry> catalog_entries();

/// Row basis generating E8 (Gram has determinant 1 and even diagonal).
Mat e8_generator();

/// Integer row basis T with T·Tᵀ = 8 × (unimodular Leech Gram).
Mat leech_generator();

/// Generator of D_m* with rows e₁…e_{m−1} and the all-halves row.
Mat dm_star_generator(size_t m);

}  // namespace latproj
