#include "ctree/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ctree/error.hpp"

namespace ctree {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t as_u64(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

std::int64_t as_i64(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

std::vector<Var> vars_from_json(const Json& j, const char* what) {
  std::vector<Var> out;
  for (const auto& v : as_array(j, what)) out.push_back(static_cast<Var>(as_u64(v, what)));
  return out;
}

}  // namespace

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    auto stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto colon = msg.find("syntax error");
    bad(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
        (colon == std::string::npos ? msg : msg.substr(colon)));
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) { return parse_json(read_text_file(path), path); }

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json atom_to_json(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::Base: return Json{{"tag", "base"}, {"value", a.value}};
    case Atom::Kind::Lifted: return Json{{"tag", "lifted"}, {"value", a.value}, {"level", a.level}};
    case Atom::Kind::Marker: return Json{{"tag", "marker"}, {"index", a.value}, {"level", a.level}};
  }
  return {};
}

Atom atom_from_json(const Json& j) {
  if (j.is_number_integer()) return Atom::base(j.get<std::int64_t>());
  if (j.is_string()) return parse_atom(j.get<std::string>());
  auto tag = as_string(field(j, "tag"), "atom tag");
  if (tag == "base") return Atom::base(as_i64(field(j, "value"), "atom value"));
  if (tag == "lifted")
    return Atom::lifted(as_i64(field(j, "value"), "atom value"),
                        static_cast<std::uint32_t>(as_u64(field(j, "level"), "atom level")));
  if (tag == "marker")
    return Atom::marker(as_i64(field(j, "index"), "marker index"),
                        static_cast<std::uint32_t>(as_u64(field(j, "level"), "atom level")));
  bad("unknown atom tag '" + tag + "'");
}

Json structure_to_json(const StructureInstance& u) {
  Json carrier = Json::array();
  for (const auto& a : u.carrier()) carrier.push_back(atom_to_json(a));
  Json functions = Json::array();
  for (const auto& f : u.functions()) {
    Json table = Json::array();
    for (auto v : f.table) table.push_back(atom_to_json(u.carrier()[v]));
    functions.push_back(Json{{"name", f.name}, {"arity", f.arity}, {"table", table}});
  }
  Json predicates = Json::array();
  for (const auto& p : u.predicates()) {
    Json table = Json::array();
    for (auto v : p.table) table.push_back(static_cast<int>(v));
    predicates.push_back(Json{{"name", p.name}, {"arity", p.arity}, {"table", table}});
  }
  return Json{{"carrier", carrier}, {"functions", functions}, {"predicates", predicates}};
}

StructureInstance structure_from_json(const Json& j) {
  std::vector<Atom> carrier;
  for (const auto& a : as_array(field(j, "carrier"), "carrier")) carrier.push_back(atom_from_json(a));
  // Index lookup before the instance exists.
  std::vector<Atom> sorted = carrier;
  auto index_of = [&](const Atom& a) {
    auto it = std::find(sorted.begin(), sorted.end(), a);
    if (it == sorted.end()) throw Error(ErrorKind::AtomNotInCarrier, a.to_string() + " is not in the carrier");
    return static_cast<AtomIndex>(it - sorted.begin());
  };
  auto dense_offset = [&](const Json& args, std::size_t arity) {
    if (as_array(args, "argument tuple").size() != arity) throw Error(ErrorKind::ArityMismatch, "argument tuple length");
    std::size_t off = 0;
    for (const auto& a : args) off = off * carrier.size() + index_of(atom_from_json(a));
    return off;
  };
  std::vector<FunctionSym> functions;
  if (j.contains("functions"))
    for (const auto& f : as_array(j["functions"], "functions")) {
      FunctionSym s{as_string(field(f, "name"), "function name"),
                    static_cast<std::size_t>(as_u64(field(f, "arity"), "arity")), {}};
      if (f.contains("table")) {
        for (const auto& v : as_array(f["table"], "function table")) s.table.push_back(index_of(atom_from_json(v)));
      } else {
        s.table.assign(table_size(carrier.size(), s.arity), 0);
        for (const auto& kv : as_array(field(f, "map"), "function map")) {
          if (!kv.is_array() || kv.size() != 2) bad("function map entries are [args, value]");
          s.table.at(dense_offset(kv[0], s.arity)) = index_of(atom_from_json(kv[1]));
        }
      }
      functions.push_back(std::move(s));
    }
  std::vector<PredicateSym> predicates;
  if (j.contains("predicates"))
    for (const auto& p : as_array(j["predicates"], "predicates")) {
      PredicateSym s{as_string(field(p, "name"), "predicate name"),
                     static_cast<std::size_t>(as_u64(field(p, "arity"), "arity")), {}};
      if (p.contains("table")) {
        for (const auto& v : as_array(p["table"], "predicate table")) {
          auto x = as_u64(v, "predicate value");
          if (x > 1) bad("predicate values must be 0 or 1");
          s.table.push_back(static_cast<std::uint8_t>(x));
        }
      } else {
        s.table.assign(table_size(carrier.size(), s.arity), 0);
        for (const auto& args : as_array(field(p, "ones"), "predicate ones")) s.table.at(dense_offset(args, s.arity)) = 1;
      }
      predicates.push_back(std::move(s));
    }
  return StructureInstance(std::move(carrier), std::move(functions), std::move(predicates));
}

Json expression_to_json(const Expression& e) {
  Json j{{"kind", e.is_predicate() ? "predicate" : "functional"}, {"symbol", e.symbol}, {"args", e.args}};
  if (!e.is_predicate()) j["target"] = e.target;
  return j;
}

Expression expression_from_json(const Json& j) {
  auto kind = as_string(field(j, "kind"), "expression kind");
  auto symbol = as_string(field(j, "symbol"), "expression symbol");
  auto args = vars_from_json(field(j, "args"), "expression args");
  if (kind == "predicate") return Expression::predicate(std::move(symbol), std::move(args));
  if (kind == "functional")
    return Expression::functional(static_cast<Var>(as_u64(field(j, "target"), "target")), std::move(symbol),
                                  std::move(args));
  bad("unknown expression kind '" + kind + "'");
}

Json problem_to_json(const Problem& z) {
  Json seq = Json::array();
  for (const auto& e : z.seq()) seq.push_back(expression_to_json(e));
  Json nu = Json::array();
  auto r = z.predicate_count();
  for (SignatureCode code = 0; code < z.nu().values().size(); ++code)
    nu.push_back(Json::array({signature_string(code, r), z.nu()(code)}));
  return Json{{"input_vars", z.inputs()}, {"seq", seq}, {"nu", nu}};
}

Problem problem_from_json(const Json& j) {
  auto inputs = vars_from_json(field(j, "input_vars"), "input_vars");
  std::vector<Expression> seq;
  for (const auto& e : as_array(field(j, "seq"), "seq")) seq.push_back(expression_from_json(e));
  auto r = count_predicates(seq);
  if (r > 20) throw Error(ErrorKind::InvalidProblem, "at most 20 predicate expressions are supported");
  std::vector<std::optional<AnswerSet>> values(std::size_t{1} << r);
  std::optional<AnswerSet> fallback;
  auto answer_set = [](const Json& s) {
    AnswerSet out;
    for (const auto& v : as_array(s, "answer set")) out.push_back(as_u64(v, "answer"));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw Error(ErrorKind::InvalidProblem, "answer sets must be nonempty");
    return out;
  };
  if (j.contains("nu_default")) fallback = answer_set(j["nu_default"]);
  for (const auto& kv : as_array(field(j, "nu"), "nu")) {
    if (!kv.is_array() || kv.size() != 2) bad("nu entries are [signature, answers]");
    auto bits = as_string(kv[0], "signature");
    if (bits.size() != r || bits.find_first_not_of("01") != std::string::npos)
      throw Error(ErrorKind::InvalidProblem, "signature '" + bits + "' does not have " + std::to_string(r) + " bits");
    std::vector<std::uint8_t> d;
    for (char c : bits) d.push_back(static_cast<std::uint8_t>(c - '0'));
    auto code = encode_signature(d);
    if (values[code]) throw Error(ErrorKind::InvalidProblem, "signature '" + bits + "' listed twice");
    values[code] = answer_set(kv[1]);
  }
  std::vector<AnswerSet> table;
  for (std::size_t code = 0; code < values.size(); ++code) {
    if (values[code]) {
      table.push_back(*values[code]);
    } else if (fallback) {
      table.push_back(*fallback);
    } else {
      throw Error(ErrorKind::InvalidProblem, "nu misses signature '" + signature_string(code, r) + "'");
    }
  }
  return Problem(std::move(inputs), AnswerTable(r, std::move(table)), std::move(seq));
}

namespace {

const char* rule_name(Measure::DefaultRule r) {
  switch (r) {
    case Measure::DefaultRule::Constant: return "constant";
    case Measure::DefaultRule::Length: return "length";
    case Measure::DefaultRule::LengthSquared: return "length_squared";
  }
  return "?";
}

}  // namespace

Json measure_to_json(const Measure& psi) {
  if (psi.kind() == Measure::Kind::WeightedDepth) {
    Json w = Json::object();
    for (const auto& [k, v] : psi.weights()) w[k] = v;
    return Json{{"kind", "weighted_depth"}, {"weights", w}};
  }
  if (psi.is_zero()) return Json{{"kind", "zero"}};
  Json entries = Json::array();
  for (const auto& [word, v] : psi.entries()) entries.push_back(Json::array({word, v}));
  return Json{{"kind", "table"},
              {"entries", entries},
              {"default_rule", rule_name(psi.default_rule())},
              {"default_constant", psi.default_constant()},
              {"lambda", psi.lambda_value()}};
}

Measure measure_from_json(const Json& j) {
  auto kind = as_string(field(j, "kind"), "measure kind");
  if (kind == "zero") return Measure::zero();
  if (kind == "weighted_depth") {
    std::map<std::string, std::uint64_t, std::less<>> w;
    const auto& weights = field(j, "weights");
    if (!weights.is_object()) bad("weights must be an object");
    for (const auto& [k, v] : weights.items()) w[k] = as_u64(v, "weight");
    return Measure::weighted_depth(std::move(w));
  }
  if (kind == "table") {
    std::map<Word, std::uint64_t> entries;
    for (const auto& kv : as_array(field(j, "entries"), "entries")) {
      if (!kv.is_array() || kv.size() != 2) bad("table entries are [word, value]");
      Word word;
      for (const auto& s : as_array(kv[0], "word")) word.push_back(as_string(s, "word letter"));
      entries[word] = as_u64(kv[1], "table value");
    }
    auto rule_text = as_string(field(j, "default_rule"), "default_rule");
    Measure::DefaultRule rule;
    if (rule_text == "constant") {
      rule = Measure::DefaultRule::Constant;
    } else if (rule_text == "length") {
      rule = Measure::DefaultRule::Length;
    } else if (rule_text == "length_squared") {
      rule = Measure::DefaultRule::LengthSquared;
    } else {
      bad("unknown default_rule '" + rule_text + "'");
    }
    return Measure::table(std::move(entries), rule, j.value("default_constant", std::uint64_t{0}),
                          j.value("lambda", std::uint64_t{0}));
  }
  throw Error(ErrorKind::InvalidMeasure, "unknown measure kind '" + kind + "'");
}

Json tree_to_json(const ComputationTree& t) {
  Json nodes = Json::array();
  for (std::size_t id = 0; id < t.nodes().size(); ++id) {
    const auto& n = t.nodes()[id];
    Json j{{"id", id}};
    switch (n.kind) {
      case TreeNode::Kind::Root: j["kind"] = "root"; break;
      case TreeNode::Kind::Functional:
      case TreeNode::Kind::Predicate:
        j["kind"] = n.kind == TreeNode::Kind::Predicate ? "predicate" : "functional";
        j["expr"] = expression_to_json(n.expr);
        break;
      case TreeNode::Kind::Terminal:
        j["kind"] = "terminal";
        j["label"] = n.label;
        break;
    }
    nodes.push_back(j);
  }
  Json edges = Json::array();
  for (const auto& e : t.edges())
    edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"label", e.label ? Json(*e.label) : Json(nullptr)}});
  return Json{{"input_vars", t.inputs()}, {"nodes", nodes}, {"edges", edges}};
}

ComputationTree tree_from_json(const Json& j) {
  auto inputs = vars_from_json(field(j, "input_vars"), "input_vars");
  const auto& raw = as_array(field(j, "nodes"), "nodes");
  std::vector<TreeNode> nodes(raw.size());
  std::vector<bool> seen(raw.size(), false);
  for (const auto& n : raw) {
    auto id = as_u64(field(n, "id"), "node id");
    if (id >= nodes.size() || seen[id]) throw Error(ErrorKind::MalformedTree, "node ids must be 0..N-1 without repeats");
    seen[id] = true;
    auto kind = as_string(field(n, "kind"), "node kind");
    if (kind == "root") {
      nodes[id] = TreeNode::root();
    } else if (kind == "terminal") {
      nodes[id] = TreeNode::terminal(as_u64(field(n, "label"), "terminal label"));
    } else if (kind == "predicate" || kind == "functional") {
      auto e = expression_from_json(field(n, "expr"));
      if (e.is_predicate() != (kind == "predicate")) throw Error(ErrorKind::MalformedTree, "node kind disagrees with expr");
      nodes[id] = TreeNode::working(std::move(e));
    } else {
      bad("unknown node kind '" + kind + "'");
    }
  }
  std::vector<TreeEdge> edges;
  for (const auto& e : as_array(field(j, "edges"), "edges")) {
    TreeEdge x{as_u64(field(e, "from"), "edge from"), as_u64(field(e, "to"), "edge to"), std::nullopt};
    if (e.contains("label") && !e["label"].is_null()) {
      auto l = as_u64(e["label"], "edge label");
      if (l > 1) throw Error(ErrorKind::MalformedTree, "edge labels must be 0 or 1");
      x.label = static_cast<std::uint8_t>(l);
    }
    edges.push_back(x);
  }
  return ComputationTree(std::move(inputs), std::move(nodes), std::move(edges));
}

std::string profile_value_text(const ProfileValue& v) {
  switch (v.kind) {
    case ProfileValue::Kind::Defined: return std::to_string(v.value);
    case ProfileValue::Kind::Infinity: return "INF";
    case ProfileValue::Kind::Undefined: return "UNDEF";
  }
  return "?";
}

Json profile_to_json(const FnProfile& p) {
  Json values = Json::array();
  for (const auto& v : p.values) {
    if (v.kind == ProfileValue::Kind::Defined) {
      values.push_back(v.value);
    } else {
      values.push_back(profile_value_text(v));
    }
  }
  return Json{{"bound", p.name()}, {"values", values}, {"provenance", p.provenance}};
}

}  // namespace ctree
