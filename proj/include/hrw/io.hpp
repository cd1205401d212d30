#pragma once

#include <functional>
#include <string>

#include "hrw/fuzzy.hpp"
#include "hrw/hemiring.hpp"

namespace hrw {

// Hemiring file: "hemiring" header, "order n", then "add" and "mul"
// sections of n whitespace-separated rows each. "#" starts a comment.
// Syntax errors throw ParseError with the line; axiom failures come back
// as the validation result.
ValidationResult parse_hemiring(const std::string& text);
std::string serialize_hemiring(const Hemiring& h);

// IFS file: header "over n" or "over N window W", then one "index mu
// lambda" line per element with degrees as "p/q" or exact decimals.
Ifs parse_ifs(const std::string& text, const Carrier& carrier);
std::string serialize_ifs(const Ifs& a);

// Morphism file: "morphism" header and "dom"/"cod"/"map" lines; dom and
// cod name carriers resolved by the caller (catalog name or file path).
using CarrierResolver = std::function<Carrier(const std::string&)>;
MorphismMap parse_morphism(const std::string& text, const CarrierResolver& resolve);

ElementSubset parse_subset(const std::string& text, int universe);  // "0,1,2"

}  // namespace hrw
