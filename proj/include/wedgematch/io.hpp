#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "wedgematch/matching.hpp"
#include "wedgematch/path.hpp"

namespace wedgematch {

// "(1,3),(2,7),(4,6)" with arbitrary whitespace, or a JSON array of pairs
// "[[1,3],[2,7],[4,6]]". ParseError on syntax, InvalidObject on content.
Matching parse_matching(std::string_view text);

// Canonical form: pairs sorted by left endpoint, no whitespace.
std::string format_matching(const Matching& m);
nlohmann::json matching_to_json(const Matching& m);

// "0,-1,0" or JSON "[0,-1,0]".
WedgePath parse_heights(std::string_view text);
std::string format_heights(const WedgePath& p);
nlohmann::json path_to_json(const WedgePath& p);

// Step string if the text is made of letters, heights otherwise.
WedgePath parse_path(std::string_view text);

enum class InputKind { Auto, Matching, Steps, Heights };

// Throws ParseError on an unknown name.
InputKind parse_input_kind(std::string_view name);

using Object = std::variant<WedgePath, Matching>;

// Auto picks by shape: "(" or "[[" means a matching, letters mean steps,
// anything else heights.
Object parse_object(std::string_view text, InputKind kind = InputKind::Auto);

} // namespace wedgematch
