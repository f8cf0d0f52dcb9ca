#pragma once

// JSON forms of structures, problems, measures, trees and profiles.
// Output is canonical: sorted keys, two-space indentation.

#include <string>
#include <string_view>

#include "json.hpp"

#include "ctree/measure.hpp"
#include "ctree/structure.hpp"
#include "ctree/tree.hpp"
#include "ctree/typelab.hpp"

namespace ctree {

using Json = nlohmann::json;

// Throws Parse with "source:line:col" on malformed text.
Json parse_json(std::string_view text, std::string_view source = "<input>");
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
std::string dump_canonical(const Json& j);

// Accepts 3, "3", "(3,2)", "k1^2" or the tagged object form.
Json atom_to_json(const Atom& a);
Atom atom_from_json(const Json& j);

Json structure_to_json(const StructureInstance& u);
StructureInstance structure_from_json(const Json& j);

Json expression_to_json(const Expression& e);
Expression expression_from_json(const Json& j);

Json problem_to_json(const Problem& z);
Problem problem_from_json(const Json& j);

Json measure_to_json(const Measure& psi);
Measure measure_from_json(const Json& j);

Json tree_to_json(const ComputationTree& t);
ComputationTree tree_from_json(const Json& j);

Json profile_to_json(const FnProfile& p);
std::string profile_value_text(const ProfileValue& v);  // "3", "INF", "UNDEF"

}  // namespace ctree
