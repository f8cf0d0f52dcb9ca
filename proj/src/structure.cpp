#include "ctree/structure.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>

namespace ctree {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::AtomNotInCarrier: return "AtomNotInCarrier";
    case ErrorKind::InvalidStructure: return "InvalidStructure";
    case ErrorKind::InvalidProblem: return "InvalidProblem";
    case ErrorKind::MalformedTree: return "MalformedTree";
    case ErrorKind::InvalidMeasure: return "InvalidMeasure";
    case ErrorKind::EmptyPool: return "EmptyPool";
    case ErrorKind::InsufficientPool: return "InsufficientPool";
    case ErrorKind::NotAttributeStructure: return "NotAttributeStructure";
    case ErrorKind::TooManyClasses: return "TooManyClasses";
    case ErrorKind::BudgetTooLargeForEnumeration: return "BudgetTooLargeForEnumeration";
    case ErrorKind::FamilyNotCostClosed: return "FamilyNotCostClosed";
    case ErrorKind::ContradictoryHints: return "ContradictoryHints";
    case ErrorKind::BadTruncation: return "BadTruncation";
    case ErrorKind::DuplicateLevels: return "DuplicateLevels";
    case ErrorKind::MissingPredicate: return "MissingPredicate";
    case ErrorKind::InvalidTau: return "InvalidTau";
    case ErrorKind::Parse: return "Parse";
  }
  return "Error";
}

std::string Atom::to_string() const {
  switch (kind) {
    case Kind::Base: return std::to_string(value);
    case Kind::Lifted: return "(" + std::to_string(value) + "," + std::to_string(level) + ")";
    case Kind::Marker: return "k" + std::to_string(value) + "^" + std::to_string(level);
  }
  return "?";
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorKind::Parse, "bad atom '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Atom parse_atom(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  if (t.empty()) throw Error(ErrorKind::Parse, "empty atom");
  if (t.front() == '(') {
    if (t.back() != ')') throw Error(ErrorKind::Parse, "bad atom '" + std::string(text) + "'");
    auto inner = t.substr(1, t.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos)
      throw Error(ErrorKind::Parse, "bad atom '" + std::string(text) + "'");
    auto level = parse_int(inner.substr(comma + 1), text);
    if (level < 1) throw Error(ErrorKind::Parse, "atom level must be positive");
    return Atom::lifted(parse_int(inner.substr(0, comma), text), static_cast<std::uint32_t>(level));
  }
  if (t.front() == 'k') {
    auto caret = t.find('^');
    if (caret == std::string_view::npos)
      throw Error(ErrorKind::Parse, "bad atom '" + std::string(text) + "'");
    auto level = parse_int(t.substr(caret + 1), text);
    if (level < 1) throw Error(ErrorKind::Parse, "atom level must be positive");
    return Atom::marker(parse_int(t.substr(1, caret - 1), text), static_cast<std::uint32_t>(level));
  }
  return Atom::base(parse_int(t, text));
}

std::size_t table_size(std::size_t carrier_size, std::size_t arity) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (carrier_size != 0 && total > std::numeric_limits<std::size_t>::max() / carrier_size)
      throw Error(ErrorKind::InvalidStructure, "symbol table too large");
    total *= carrier_size;
  }
  return total;
}

StructureInstance::StructureInstance(std::vector<Atom> carrier, std::vector<FunctionSym> functions,
                                     std::vector<PredicateSym> predicates)
    : carrier_(std::move(carrier)), functions_(std::move(functions)), predicates_(std::move(predicates)) {
  if (carrier_.empty()) throw Error(ErrorKind::InvalidStructure, "carrier is empty");
  if (predicates_.empty()) throw Error(ErrorKind::InvalidStructure, "predicate set is empty");
  for (std::size_t i = 0; i < carrier_.size(); ++i) {
    if (i > 0 && !(carrier_[i - 1] < carrier_[i]))
      throw Error(ErrorKind::InvalidStructure, "carrier must be strictly increasing in atom order");
    index_.emplace(carrier_[i], static_cast<AtomIndex>(i));
  }
  for (std::size_t i = 0; i < functions_.size(); ++i) {
    const auto& f = functions_[i];
    if (f.name.empty()) throw Error(ErrorKind::InvalidStructure, "function with empty name");
    if (f.table.size() != table_size(carrier_.size(), f.arity))
      throw Error(ErrorKind::InvalidStructure, "function '" + f.name + "' table is not total");
    for (auto v : f.table)
      if (v >= carrier_.size())
        throw Error(ErrorKind::InvalidStructure, "function '" + f.name + "' leaves the carrier");
    if (!function_by_name_.emplace(f.name, i).second)
      throw Error(ErrorKind::InvalidStructure, "duplicate function '" + f.name + "'");
  }
  for (std::size_t i = 0; i < predicates_.size(); ++i) {
    const auto& p = predicates_[i];
    if (p.name.empty()) throw Error(ErrorKind::InvalidStructure, "predicate with empty name");
    if (p.arity == 0) throw Error(ErrorKind::InvalidStructure, "predicate '" + p.name + "' has arity 0");
    if (p.table.size() != table_size(carrier_.size(), p.arity))
      throw Error(ErrorKind::InvalidStructure, "predicate '" + p.name + "' table is not total");
    for (auto v : p.table)
      if (v > 1) throw Error(ErrorKind::InvalidStructure, "predicate '" + p.name + "' is not 0/1 valued");
    if (function_by_name_.contains(p.name))
      throw Error(ErrorKind::InvalidStructure, "'" + p.name + "' is both a function and a predicate");
    if (!predicate_by_name_.emplace(p.name, i).second)
      throw Error(ErrorKind::InvalidStructure, "duplicate predicate '" + p.name + "'");
  }
}

std::optional<AtomIndex> StructureInstance::find_atom(const Atom& atom) const {
  auto it = index_.find(atom);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AtomIndex StructureInstance::index_of(const Atom& atom) const {
  auto idx = find_atom(atom);
  if (!idx) throw Error(ErrorKind::AtomNotInCarrier, atom.to_string());
  return *idx;
}

const PredicateSym* StructureInstance::find_predicate(std::string_view name) const {
  auto it = predicate_by_name_.find(name);
  return it == predicate_by_name_.end() ? nullptr : &predicates_[it->second];
}

const FunctionSym* StructureInstance::find_function(std::string_view name) const {
  auto it = function_by_name_.find(name);
  return it == function_by_name_.end() ? nullptr : &functions_[it->second];
}

const PredicateSym& StructureInstance::predicate(std::string_view name) const {
  if (auto* p = find_predicate(name)) return *p;
  throw Error(ErrorKind::UnknownSymbol, "predicate '" + std::string(name) + "'");
}

const FunctionSym& StructureInstance::function(std::string_view name) const {
  if (auto* f = find_function(name)) return *f;
  throw Error(ErrorKind::UnknownSymbol, "function '" + std::string(name) + "'");
}

std::size_t StructureInstance::table_offset(std::span<const AtomIndex> args) const {
  std::size_t offset = 0;
  for (auto a : args) offset = offset * carrier_.size() + a;
  return offset;
}

std::uint8_t StructureInstance::eval(const PredicateSym& p, std::span<const AtomIndex> args) const {
  return p.table[table_offset(args)];
}

AtomIndex StructureInstance::eval(const FunctionSym& f, std::span<const AtomIndex> args) const {
  return f.table[table_offset(args)];
}

std::string Expression::to_string() const {
  std::string out;
  if (kind == Kind::Functional) out = "x" + std::to_string(target) + " <= ";
  out += symbol + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ",";
    out += "x" + std::to_string(args[i]);
  }
  return out + ")";
}

void validate_expressions(const StructureInstance& u, std::span<const Expression> seq) {
  for (const auto& e : seq) {
    std::size_t arity = 0;
    if (e.is_predicate()) {
      arity = u.predicate(e.symbol).arity;
    } else {
      arity = u.function(e.symbol).arity;
    }
    if (e.args.size() != arity)
      throw Error(ErrorKind::ArityMismatch, e.to_string() + " expects " + std::to_string(arity) + " arguments");
  }
}

Var covering_index(std::span<const Var> inputs, std::span<const Expression> seq) {
  Var s = 0;
  for (auto v : inputs) s = std::max(s, v);
  for (const auto& e : seq) {
    if (!e.is_predicate()) s = std::max(s, e.target);
    for (auto v : e.args) s = std::max(s, v);
  }
  return s;
}

std::size_t count_predicates(std::span<const Expression> seq) {
  return static_cast<std::size_t>(std::count_if(seq.begin(), seq.end(), [](const Expression& e) { return e.is_predicate(); }));
}

SignatureCode encode_signature(std::span<const std::uint8_t> bits) {
  if (bits.size() > 63) throw Error(ErrorKind::InvalidProblem, "signature longer than 63 bits");
  SignatureCode code = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) code |= SignatureCode{1} << i;
  return code;
}

std::vector<std::uint8_t> decode_signature(SignatureCode code, std::size_t r) {
  std::vector<std::uint8_t> bits(r);
  for (std::size_t i = 0; i < r; ++i) bits[i] = static_cast<std::uint8_t>((code >> i) & 1U);
  return bits;
}

std::string signature_string(SignatureCode code, std::size_t r) {
  std::string s(r, '0');
  for (std::size_t i = 0; i < r; ++i)
    if ((code >> i) & 1U) s[i] = '1';
  return s;
}

namespace {

// Largest r for which an explicit answer table is materialized.
constexpr std::size_t kMaxAnswerArity = 20;

void check_answer_set(const AnswerSet& s) {
  if (s.empty()) throw Error(ErrorKind::InvalidProblem, "answer set must be nonempty");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!(s[i - 1] < s[i])) throw Error(ErrorKind::InvalidProblem, "answer set must be sorted and duplicate-free");
}

}  // namespace

AnswerTable::AnswerTable(std::size_t r, std::vector<AnswerSet> values) : r_(r), values_(std::move(values)) {
  if (r_ == 0) throw Error(ErrorKind::InvalidProblem, "answer table needs r >= 1");
  if (r_ > kMaxAnswerArity) throw Error(ErrorKind::InvalidProblem, "answer table arity too large to materialize");
  if (values_.size() != (std::size_t{1} << r_))
    throw Error(ErrorKind::InvalidProblem, "answer table must list all 2^r signatures");
  for (const auto& v : values_) check_answer_set(v);
}

AnswerTable AnswerTable::constant(std::size_t r, AnswerSet value) {
  if (r == 0 || r > kMaxAnswerArity) throw Error(ErrorKind::InvalidProblem, "bad answer table arity");
  return AnswerTable(r, std::vector<AnswerSet>(std::size_t{1} << r, std::move(value)));
}

AnswerTable AnswerTable::distinct_singletons(std::size_t r, Answer offset) {
  if (r == 0 || r > kMaxAnswerArity) throw Error(ErrorKind::InvalidProblem, "bad answer table arity");
  std::vector<AnswerSet> values(std::size_t{1} << r);
  for (std::size_t code = 0; code < values.size(); ++code) values[code] = {offset + code};
  return AnswerTable(r, std::move(values));
}

Problem::Problem(std::vector<Var> inputs, AnswerTable nu, std::vector<Expression> seq)
    : inputs_(std::move(inputs)), nu_(std::move(nu)), seq_(std::move(seq)) {
  if (inputs_.empty()) throw Error(ErrorKind::InvalidProblem, "input variable set is empty");
  for (std::size_t i = 1; i < inputs_.size(); ++i)
    if (!(inputs_[i - 1] < inputs_[i]))
      throw Error(ErrorKind::InvalidProblem, "input variables must be sorted and distinct");
  if (seq_.empty()) throw Error(ErrorKind::InvalidProblem, "expression sequence is empty");
  auto r = count_predicates(seq_);
  if (r == 0) throw Error(ErrorKind::InvalidProblem, "problem needs at least one predicate expression");
  if (r != nu_.arity())
    throw Error(ErrorKind::InvalidProblem, "answer table arity " + std::to_string(nu_.arity()) +
                                               " differs from predicate count " + std::to_string(r));
}

TupleSpace::TupleSpace(std::size_t carrier_size, std::size_t n) : base_(carrier_size), n_(n), count_(1) {
  for (std::size_t i = 0; i < n_; ++i) {
    count_ *= base_;
    if (count_ > kMaxTuples) throw Error(ErrorKind::InvalidStructure, "tuple space exceeds enumeration limit");
  }
}

void TupleSpace::decode(std::uint64_t index, std::span<AtomIndex> out) const {
  for (std::size_t k = n_; k-- > 0;) {
    out[k] = static_cast<AtomIndex>(index % base_);
    index /= base_;
  }
}

std::vector<AtomIndex> TupleSpace::decode(std::uint64_t index) const {
  std::vector<AtomIndex> out(n_);
  decode(index, out);
  return out;
}

std::uint64_t TupleSpace::encode(std::span<const AtomIndex> tuple) const {
  std::uint64_t idx = 0;
  for (auto a : tuple) idx = idx * base_ + a;
  return idx;
}

}  // namespace ctree
