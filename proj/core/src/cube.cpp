#include "bnkit/cube.hpp"

#include "bnkit/error.hpp"
#include "bnkit/network.hpp"

#include <algorithm>
#include <cctype>

namespace bnkit {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b)
    throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

char value_char(ValueSet v) {
  switch (v) {
  case ValueSet::zero:
    return '0';
  case ValueSet::one:
    return '1';
  case ValueSet::both:
    return '*';
  case ValueSet::none:
    break;
  }
  return '_';
}

ValueSet parse_value_char(char c) {
  switch (c) {
  case '0':
    return ValueSet::zero;
  case '1':
    return ValueSet::one;
  case '*':
  case '-':
    return ValueSet::both;
  default:
    throw Error(std::string("invalid cube character '") + c + "'");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0)
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0)
    s.remove_suffix(1);
  return s;
}

// Named form "a=1,b=0,c=*"; unnamed components keep their default.
std::vector<ValueSet> parse_named(std::string_view text, const BooleanNetwork &net,
                                  std::vector<bool> *named) {
  std::vector<ValueSet> values(net.size(), ValueSet::both);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view item = trim(text.substr(start, end - start));
    start = end + 1;
    if (item.empty()) {
      if (end == text.size())
        break;
      continue;
    }
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos)
      throw Error("expected 'name=value' in '" + std::string(item) + "'");
    const std::string_view name = trim(item.substr(0, eq));
    const std::string_view value = trim(item.substr(eq + 1));
    auto index = net.index_of(name);
    if (!index)
      throw Error("unknown component '" + std::string(name) + "'");
    if (value.size() != 1)
      throw Error("invalid value '" + std::string(value) + "' for '" + std::string(name) + "'");
    values[*index] = parse_value_char(value.front());
    if (named)
      (*named)[*index] = true;
    if (end == text.size())
      break;
  }
  return values;
}

} // namespace

State State::parse(std::string_view text) {
  State x(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1')
      throw Error(std::string("invalid state character '") + text[i] + "'");
    x.set(i, text[i] == '1');
  }
  return x;
}

std::string State::to_string() const {
  std::string out(values_.size(), '0');
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != 0)
      out[i] = '1';
  return out;
}

Cube Cube::from_state(const State &x) {
  Cube c(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    c.fix(i, x[i]);
  return c;
}

Cube Cube::from_value_sets(std::vector<ValueSet> values) {
  Cube c;
  c.values_ = std::move(values);
  return c;
}

Cube Cube::parse(std::string_view text) {
  Cube c(text.size());
  for (std::size_t i = 0; i < text.size(); ++i)
    c.set(i, parse_value_char(text[i]));
  return c;
}

std::size_t Cube::free_count() const noexcept {
  return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), ValueSet::both));
}

std::string Cube::to_string() const {
  std::string out(values_.size(), '*');
  for (std::size_t i = 0; i < values_.size(); ++i)
    out[i] = value_char(values_[i]);
  return out;
}

bool contains(const Cube &c, const State &x) {
  require_same_size(c.size(), x.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!contains_value(c[i], x[i]))
      return false;
  return true;
}

bool subset(const Cube &a, const Cube &b) {
  require_same_size(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_subset(a[i], b[i]))
      return false;
  return true;
}

std::optional<Cube> intersect(const Cube &a, const Cube &b) {
  require_same_size(a.size(), b.size());
  std::vector<ValueSet> values(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    values[i] = a[i] & b[i];
    if (values[i] == ValueSet::none)
      return std::nullopt;
  }
  return Cube::from_value_sets(std::move(values));
}

Cube parse_cube(std::string_view text, const BooleanNetwork &net) {
  text = trim(text);
  if (text.find('=') != std::string_view::npos)
    return Cube::from_value_sets(parse_named(text, net, nullptr));
  if (text.size() != net.size())
    throw DimensionError("cube '" + std::string(text) + "' has length " +
                         std::to_string(text.size()) + ", expected " +
                         std::to_string(net.size()));
  return Cube::parse(text);
}

State parse_state(std::string_view text, const BooleanNetwork &net) {
  text = trim(text);
  if (text.find('=') != std::string_view::npos) {
    std::vector<bool> named(net.size(), false);
    auto values = parse_named(text, net, &named);
    State x(net.size());
    for (std::size_t i = 0; i < net.size(); ++i) {
      if (!named[i] || values[i] == ValueSet::both)
        throw Error("state must fix component '" + net.name(static_cast<ComponentIndex>(i)) +
                    "'");
      x.set(i, values[i] == ValueSet::one);
    }
    return x;
  }
  if (text.size() != net.size())
    throw DimensionError("state '" + std::string(text) + "' has length " +
                         std::to_string(text.size()) + ", expected " +
                         std::to_string(net.size()));
  return State::parse(text);
}

VertexRange::VertexRange(const Cube &c) : first_(c.size()) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.is_free(i))
      free_.push_back(i);
    else
      first_.set(i, c[i] == ValueSet::one);
  }
}

VertexRange::iterator VertexRange::begin() const { return iterator(&free_, first_); }

VertexRange::iterator &VertexRange::iterator::operator++() {
  for (auto it = free_->rbegin(); it != free_->rend(); ++it) {
    if (!current_[*it]) {
      current_.set(*it, true);
      return *this;
    }
    current_.set(*it, false);
  }
  done_ = true;
  return *this;
}

VertexRange vertices(const Cube &c, std::size_t cap) {
  const std::size_t free = c.free_count();
  if (free > cap)
    throw CapacityError("cube has " + std::to_string(free) + " free components (cap " +
                        std::to_string(cap) + ")");
  return VertexRange(c);
}

} // namespace bnkit
