#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hrw/fuzzy.hpp"
#include "hrw/hemiring.hpp"

namespace hrw::catalog {

// Built-in structures: R1 (the order-4 test hemiring), Z2, BOOL, B2B
// (BOOL x BOOL) and windowed naturals N_<W>. Bundled IFS: A1 and T123 on
// R1, A3 on Z2, MU2 over windowed naturals.
struct CatalogEntry {
  std::string name;
  Carrier carrier;
  std::vector<std::pair<std::string, Ifs>> bundled;
};

std::vector<std::string> structure_names();  // representatives; N_<W> is a family
bool is_structure_name(const std::string& name);
Carrier structure(const std::string& name);  // re-validates on every load

std::vector<std::string> ifs_names();
bool is_ifs_name(const std::string& name);
// MU2 is built over the given windowed context (default N_64); the finite
// catalog IFS ignore the context but reject a mismatching one.
Ifs ifs(const std::string& name, const std::optional<Carrier>& context = {});

std::vector<std::string> morphism_names();
bool is_morphism_name(const std::string& name);
MorphismMap morphism(const std::string& name);  // id_Z2, zero_Z2, collapse_R1_BOOL, proj_B2B_BOOL

CatalogEntry get(const std::string& name);
std::vector<std::string> names();  // everything `catalog list` shows

}  // namespace hrw::catalog
