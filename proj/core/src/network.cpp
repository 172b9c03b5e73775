#include "bnkit/network.hpp"

#include "bnkit/error.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <fstream>
#include <sstream>

namespace bnkit {

namespace {

bool has_mixed_signs(const Dnf &dnf) {
  std::unordered_map<ComponentIndex, std::uint8_t> signs;
  for (const auto &clause : dnf.clauses())
    for (const auto &lit : clause)
      signs[lit.component] |= lit.positive ? 2 : 1;
  return std::any_of(signs.begin(), signs.end(), [](const auto &kv) { return kv.second == 3; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0)
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0)
    s.remove_suffix(1);
  return s;
}

bool is_header(std::string_view line) {
  std::string squeezed;
  for (char c : line)
    if (std::isspace(static_cast<unsigned char>(c)) == 0)
      squeezed += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return squeezed == "targets,factors";
}

} // namespace

NodeFunction::NodeFunction(Dnf dnf, std::optional<Expression> source)
    : dnf_(std::move(dnf)), unate_(!has_mixed_signs(dnf_)), source_(std::move(source)) {
  if (!unate_)
    bdd_ = std::make_shared<const Bdd>(Bdd::from_dnf(dnf_));
}

NodeFunction normalize(const Expression &expr,
                       const std::unordered_map<std::string, ComponentIndex> &index_of,
                       std::size_t clause_cap) {
  auto resolve = [&](const std::string &name) -> ComponentIndex {
    auto it = index_of.find(name);
    if (it == index_of.end())
      throw ModelError("undeclared component '" + name + "'");
    return it->second;
  };
  return NodeFunction(to_dnf(expr, resolve, clause_cap), expr);
}

BooleanNetwork BooleanNetwork::from_expressions(
    std::vector<std::pair<std::string, Expression>> defs, std::size_t clause_cap) {
  BooleanNetwork net;
  net.names_.reserve(defs.size());
  for (const auto &[name, expr] : defs) {
    if (!is_valid_identifier(name))
      throw ModelError("invalid component name '" + name + "'");
    if (!net.index_.emplace(name, static_cast<ComponentIndex>(net.names_.size())).second)
      throw ModelError("duplicate component '" + name + "'");
    net.names_.push_back(name);
  }
  net.functions_.reserve(defs.size());
  for (const auto &[name, expr] : defs)
    net.functions_.push_back(normalize(expr, net.index_, clause_cap));
  net.rebuild_dependents();
  return net;
}

std::optional<ComponentIndex> BooleanNetwork::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

void BooleanNetwork::set(const std::string &name, const Expression &expr,
                         std::size_t clause_cap) {
  if (!is_valid_identifier(name))
    throw ModelError("invalid component name '" + name + "'");
  auto existing = index_of(name);
  if (existing) {
    functions_[*existing] = normalize(expr, index_, clause_cap);
  } else {
    auto index = index_;
    index.emplace(name, static_cast<ComponentIndex>(names_.size()));
    NodeFunction fn = normalize(expr, index, clause_cap);
    index_ = std::move(index);
    names_.push_back(name);
    functions_.push_back(std::move(fn));
  }
  rebuild_dependents();
}

void BooleanNetwork::rebuild_dependents() {
  dependents_.assign(names_.size(), {});
  for (ComponentIndex target = 0; target < functions_.size(); ++target)
    for (ComponentIndex source : functions_[target].dnf().support())
      dependents_[source].push_back(target);
}

bool operator==(const BooleanNetwork &a, const BooleanNetwork &b) {
  if (a.names_ != b.names_)
    return false;
  for (std::size_t i = 0; i < a.functions_.size(); ++i)
    if (!(a.functions_[i].dnf() == b.functions_[i].dnf()))
      return false;
  return true;
}

BooleanNetwork parse_bnet(std::string_view text) {
  struct Definition {
    std::string name;
    Expression expr;
    std::size_t line;
  };
  std::vector<Definition> defs;
  std::unordered_map<std::string, std::size_t> declared_at;
  bool seen_content = false;
  std::size_t line_no = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (!raw.empty() && raw.back() == '\r')
      raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    if (trim(raw).empty()) {
      if (end == text.size())
        break;
      continue;
    }
    if (!seen_content) {
      seen_content = true;
      if (is_header(raw))
        continue;
    }

    const std::size_t comma = raw.find(',');
    if (comma == std::string_view::npos)
      throw ParseError("expected 'name, expression'", line_no, 0);
    const std::string name(trim(raw.substr(0, comma)));
    if (name.empty())
      throw ParseError("missing component name", line_no, 1);
    if (is_reserved_word(name))
      throw ParseError("reserved word '" + name + "' used as identifier", line_no, 1);
    if (!is_valid_identifier(name))
      throw ParseError("invalid component name '" + name + "'", line_no, 1);
    if (auto [it, inserted] = declared_at.emplace(name, line_no); !inserted)
      throw ModelError("line " + std::to_string(line_no) + ": duplicate component '" + name +
                       "' (first declared on line " + std::to_string(it->second) + ")");

    Expression expr = parse_expression(raw.substr(comma + 1), line_no, comma + 1);
    defs.push_back({name, std::move(expr), line_no});
    if (end == text.size())
      break;
  }

  for (const auto &def : defs)
    for (const auto &ref : referenced_names(def.expr))
      if (!declared_at.count(ref))
        throw ModelError("line " + std::to_string(def.line) + ": undeclared component '" + ref +
                         "' in function of '" + def.name + "'");

  std::vector<std::pair<std::string, Expression>> pairs;
  pairs.reserve(defs.size());
  for (auto &def : defs)
    pairs.emplace_back(std::move(def.name), std::move(def.expr));
  return BooleanNetwork::from_expressions(std::move(pairs));
}

BooleanNetwork load_bnet(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_bnet(buffer.str());
}

std::string export_bnet(const BooleanNetwork &net) {
  std::string out = "targets, factors\n";
  for (ComponentIndex i = 0; i < net.size(); ++i) {
    out += net.name(i);
    out += ", ";
    out += render_dnf(net.function(i).dnf(), net.names());
    out += '\n';
  }
  return out;
}

BooleanNetwork set_function(const BooleanNetwork &net, const std::string &name,
                            std::string_view expr_text) {
  Expression expr = parse_expression(expr_text);
  BooleanNetwork copy = net;
  copy.set(name, expr);
  return copy;
}

bool evaluate(const NodeFunction &fn, std::span<const std::uint8_t> state) {
  const bool value = fn.evaluate(state);
  assert(fn.bdd() == nullptr || fn.bdd()->evaluate(state) == value);
  return value;
}

} // namespace bnkit
