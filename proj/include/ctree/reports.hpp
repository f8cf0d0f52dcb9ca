#pragma once

// Text, JSON and CSV renderings of type-lab results.

#include <string>
#include <vector>

#include "ctree/families.hpp"
#include "ctree/json_io.hpp"
#include "ctree/typelab.hpp"

namespace ctree {

// 3x3 layout with rows and columns labeled i, d, a.
std::string render_letter_table(const LetterTable& t);
std::string render_pair_table(const PairTable& t);

Json verdict_to_json(const TypeVerdict& v);
Json typelab_case_to_json(const TypelabCase& c);
std::string typelab_case_text(const TypelabCase& c);
// n,bound,m,value rows for every profile of every case.
std::string profiles_csv(const std::vector<TypelabCase>& cases);

struct TypelabConfig {
  std::string tau;
  std::uint32_t n_lo = 1;
  std::uint32_t n_hi = 1;
  std::uint64_t big_m = 3;
  std::int64_t trunc = 4;
  FamilyOptions options;
};

struct TypelabRun {
  std::vector<TypelabCase> cases;
  Json report;  // embeds the config except the thread count
  bool consistent = true;
};

TypelabRun run_typelab(const TypelabConfig& config);
std::string typelab_text(const TypelabRun& run);

Json lattice_to_json();
std::string lattice_text();

}  // namespace ctree
