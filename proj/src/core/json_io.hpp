#pragma once

#include <string>
#include <vector>

#include "core/automorphism.hpp"
#include "core/hom.hpp"
#include "core/sft.hpp"

namespace polysft {

// Canonical JSON: object keys sorted, integers formatted plainly. Parsers
// raise Error(ErrorCode::Parse) on malformed input and propagate semantic
// errors from the underlying constructors.

GroupPtr parse_group(const std::string& text);
std::string group_to_json(const GroupPtr& g);

Sft parse_sft(const std::string& text);
std::string sft_to_json(const Sft& x);

Configuration parse_configuration(const std::string& text);
std::string configuration_to_json(const Configuration& c);

Homomorphism parse_hom(const std::string& text);
std::string hom_to_json(const Homomorphism& h);

std::vector<Homomorphism> parse_hom_chain(const std::string& text);

WangTileSet parse_tiles(const std::string& text);
std::string tiles_to_json(const WangTileSet& t);

// {"matrix": [[...]]} or {"shear": {"u": [...], "v": [...]}}, or the inline
// row-major text form "a,b;c,d".
AutMatrix parse_aut_matrix(const std::string& text);

// Flat {"symbol": 0-or-1} object, resolved against an alphabet.
std::vector<int> parse_projection(const std::string& text, const Alphabet& alphabet);

} // namespace polysft
