#include "ctree/reports.hpp"

#include <sstream>

namespace ctree {

namespace {

std::string letters(const std::vector<Letter>& xs) {
  std::string s = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + letter_symbol(xs[k]);
  return s + "}";
}

template <typename Cell>
std::string grid(Cell&& cell) {
  std::ostringstream out;
  out << "     i      d      a\n";
  for (std::size_t b = 0; b < 3; ++b) {
    out << kParams[b] << " ";
    for (std::size_t c = 0; c < 3; ++c) {
      auto s = cell(b, c);
      out << "  " << s;
      // Greek letters are two bytes each in UTF-8; pad by display width.
      std::size_t width = 0;
      for (unsigned char ch : s) width += (ch & 0xC0) != 0x80;
      for (; width < 5; ++width) out << ' ';
    }
    out << "\n";
  }
  return out.str();
}

Json hints_to_json(const Hints& h) {
  Json j = Json::object();
  j["domain_infinite"] = h.domain_infinite ? Json(*h.domain_infinite) : Json(nullptr);
  j["bounded"] = h.bounded ? Json(*h.bounded) : Json(nullptr);
  return j;
}

Json cell_to_json(const CellCheck& c) {
  return Json{{"profile", profile_to_json(c.profile)},
              {"hints", hints_to_json(c.hints)},
              {"verdict", verdict_to_json(c.verdict)},
              {"predicted", letter_name(c.predicted)},
              {"consistent", c.consistent}};
}

}  // namespace

std::string render_letter_table(const LetterTable& t) {
  return grid([&](std::size_t b, std::size_t c) { return letter_symbol(t[b][c]); });
}

std::string render_pair_table(const PairTable& t) {
  return grid([&](std::size_t b, std::size_t c) { return letter_symbol(t[b][c].first) + letter_symbol(t[b][c].second); });
}

Json verdict_to_json(const TypeVerdict& v) {
  Json consistent = Json::array();
  for (auto x : v.consistent) consistent.push_back(letter_name(x));
  return Json{{"consistent", consistent},
              {"dom", v.dom},
              {"dom_plus", v.dom_plus},
              {"dom_minus", v.dom_minus},
              {"tail_plus", v.tail_plus},
              {"tail_minus", v.tail_minus},
              {"saw_infinity", v.saw_infinity},
              {"max_value", v.max_value ? Json(*v.max_value) : Json(nullptr)}};
}

Json typelab_case_to_json(const TypelabCase& c) {
  Json upper = Json::object(), lower = Json::object();
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t k = 0; k < 3; ++k) {
      std::string key{kParams[b], kParams[k]};
      upper[key] = cell_to_json(c.upper[b][k]);
      lower[key] = cell_to_json(c.lower[b][k]);
    }
  return Json{{"n", c.n},
              {"predicted", "t" + std::to_string(c.v)},
              {"family", c.descriptor},
              {"family_size", c.family_size},
              {"closed_budget", c.closed_budget},
              {"upper", upper},
              {"lower", lower},
              {"duality_ok", c.duality_ok},
              {"consistent", c.consistent},
              {"scope", "verdicts cover the enumerated family only, not all problems over the structure"}};
}

std::string typelab_case_text(const TypelabCase& c) {
  std::ostringstream out;
  out << "n=" << c.n << "  predicted t" << c.v << " / l" << c.v << "  family " << c.descriptor << " ("
      << c.family_size << " members)\n";
  auto show = [&](const char* title, const std::array<std::array<CellCheck, 3>, 3>& cells) {
    out << title << " predicted:\n";
    out << grid([&](std::size_t b, std::size_t k) { return letter_symbol(cells[b][k].predicted); });
    out << title << " observed-consistent:\n";
    out << grid([&](std::size_t b, std::size_t k) {
      return (cells[b][k].consistent ? std::string("ok") : std::string("NO"));
    });
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t k = 0; k < 3; ++k) {
        const auto& x = cells[b][k];
        out << "  " << x.profile.name() << " [";
        for (std::size_t m = 0; m < x.profile.values.size(); ++m)
          out << (m ? " " : "") << profile_value_text(x.profile.values[m]);
        out << "] -> " << letters(x.verdict.consistent) << (x.consistent ? "" : "  MISMATCH") << "\n";
      }
  };
  show("upper", c.upper);
  show("lower", c.lower);
  out << "duality " << (c.duality_ok ? "ok" : "FAILED") << ", overall " << (c.consistent ? "consistent" : "INCONSISTENT")
      << "\n";
  return out.str();
}

std::string profiles_csv(const std::vector<TypelabCase>& cases) {
  std::ostringstream out;
  out << "n,bound,m,value\n";
  for (const auto& c : cases)
    for (const auto* cells : {&c.upper, &c.lower})
      for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t k = 0; k < 3; ++k) {
          const auto& p = (*cells)[b][k].profile;
          for (std::size_t m = 0; m < p.values.size(); ++m)
            out << c.n << "," << p.name() << "," << m << "," << profile_value_text(p.values[m]) << "\n";
        }
  return out.str();
}

TypelabRun run_typelab(const TypelabConfig& config) {
  auto tau = parse_tau(config.tau);
  auto tp = build_tau_pair(tau, config.trunc);
  TypelabRun run;
  Json cases = Json::array();
  for (auto n = config.n_lo; n <= config.n_hi; ++n) {
    run.cases.push_back(observed_consistency(tau, tp, n, config.big_m, config.options));
    cases.push_back(typelab_case_to_json(run.cases.back()));
    run.consistent = run.consistent && run.cases.back().consistent && run.cases.back().duality_ok;
  }
  run.report = Json{{"config",
                     {{"tau", tau.to_string()},
                      {"n", {config.n_lo, config.n_hi}},
                      {"M", config.big_m},
                      {"trunc", config.trunc},
                      {"budget", config.options.budget},
                      {"max_size", config.options.max_size},
                      {"padding", config.options.padding}}},
                    {"cases", cases},
                    {"consistent", run.consistent}};
  return run;
}

std::string typelab_text(const TypelabRun& run) {
  std::string out;
  for (const auto& c : run.cases) out += typelab_case_text(c) + "\n";
  out += std::string("overall: ") + (run.consistent ? "consistent" : "INCONSISTENT") + "\n";
  return out;
}

Json lattice_to_json() {
  Json edges = Json::array();
  for (auto [i, j] : hasse_diagram()) edges.push_back(Json::array({"t" + std::to_string(i), "t" + std::to_string(j)}));
  Json families = Json::array();
  for (const auto& f : delta_u_families()) {
    std::string s;
    for (std::size_t k = 0; k < f.size(); ++k)
      s += "t" + std::to_string(f[k]) + (k + 1 == f.size() ? "^inf" : "^*") + (k + 1 == f.size() ? "" : " ");
    families.push_back(s);
  }
  return Json{{"hasse_edges", edges}, {"delta_u_families", families}};
}

std::string lattice_text() {
  std::ostringstream out;
  out << "Hasse edges:\n";
  for (auto [i, j] : hasse_diagram()) out << "  t" << i << " -> t" << j << "\n";
  out << "Delta_u families:\n";
  auto lattice = lattice_to_json();
  for (const auto& f : lattice["delta_u_families"]) out << "  " << f.get<std::string>() << "\n";
  return out.str();
}

}  // namespace ctree
