#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bnkit {

class BooleanNetwork;

/// Subset of {0,1} stored as a two-bit mask; `both` reads as `*`.
enum class ValueSet : std::uint8_t { none = 0, zero = 1, one = 2, both = 3 };

constexpr ValueSet operator|(ValueSet a, ValueSet b) noexcept {
  return static_cast<ValueSet>(static_cast<std::uint8_t>(a) | static_cast<std::uint8_t>(b));
}
constexpr ValueSet operator&(ValueSet a, ValueSet b) noexcept {
  return static_cast<ValueSet>(static_cast<std::uint8_t>(a) & static_cast<std::uint8_t>(b));
}
constexpr ValueSet &operator|=(ValueSet &a, ValueSet b) noexcept { return a = a | b; }
constexpr ValueSet singleton(bool value) noexcept {
  return value ? ValueSet::one : ValueSet::zero;
}
constexpr bool contains_value(ValueSet set, bool value) noexcept {
  return (set & singleton(value)) != ValueSet::none;
}
/// True when `a` is a subset of `b`.
constexpr bool is_subset(ValueSet a, ValueSet b) noexcept { return (a & b) == a; }

/// Binary vector, one byte (0 or 1) per component.
class State {
public:
  State() = default;
  explicit State(std::size_t n) : values_(n, 0) {}
  explicit State(std::vector<std::uint8_t> values) : values_(std::move(values)) {}

  /// Parses a string over {0,1}.
  static State parse(std::string_view text);

  std::size_t size() const noexcept { return values_.size(); }
  bool operator[](std::size_t i) const noexcept { return values_[i] != 0; }
  void set(std::size_t i, bool value) noexcept { values_[i] = value ? 1 : 0; }
  void flip(std::size_t i) noexcept { values_[i] ^= 1; }
  std::span<const std::uint8_t> values() const noexcept { return values_; }

  std::string to_string() const;

  friend auto operator<=>(const State &, const State &) = default;

private:
  std::vector<std::uint8_t> values_;
};

/// Subcube of {0,1}^n, a vector over {0,1,*}. Never empty (no component has
/// ValueSet::none) unless built through `from_value_sets` with such input.
class Cube {
public:
  Cube() = default;
  /// The full cube of dimension n.
  explicit Cube(std::size_t n) : values_(n, ValueSet::both) {}

  static Cube full(std::size_t n) { return Cube(n); }
  static Cube from_state(const State &x);
  static Cube from_value_sets(std::vector<ValueSet> values);
  /// Parses a string over {0,1,*}.
  static Cube parse(std::string_view text);

  std::size_t size() const noexcept { return values_.size(); }
  ValueSet operator[](std::size_t i) const noexcept { return values_[i]; }
  void set(std::size_t i, ValueSet v) noexcept { values_[i] = v; }
  void fix(std::size_t i, bool value) noexcept { values_[i] = singleton(value); }
  void free(std::size_t i) noexcept { values_[i] = ValueSet::both; }
  bool is_free(std::size_t i) const noexcept { return values_[i] == ValueSet::both; }
  bool is_fixed(std::size_t i) const noexcept {
    return values_[i] == ValueSet::zero || values_[i] == ValueSet::one;
  }
  /// Meaningful for fixed components only.
  bool fixed_value(std::size_t i) const noexcept { return values_[i] == ValueSet::one; }
  std::size_t free_count() const noexcept;
  bool is_full() const noexcept { return free_count() == values_.size(); }

  std::span<const ValueSet> value_sets() const noexcept { return values_; }
  /// Value sets as raw two-bit masks.
  std::span<const std::uint8_t> masks() const noexcept {
    return {reinterpret_cast<const std::uint8_t *>(values_.data()), values_.size()};
  }

  std::string to_string() const;

  friend auto operator<=>(const Cube &, const Cube &) = default;

private:
  std::vector<ValueSet> values_;
};

bool contains(const Cube &c, const State &x);
/// Vertex-set inclusion of `a` in `b`.
bool subset(const Cube &a, const Cube &b);
std::optional<Cube> intersect(const Cube &a, const Cube &b);

/// Parses either a positional pattern over {0,1,*} of length n, or the named
/// form `a=1,b=0` which leaves unnamed components free.
Cube parse_cube(std::string_view text, const BooleanNetwork &net);
/// Positional 0/1 string of length n, or the named form naming every
/// component.
State parse_state(std::string_view text, const BooleanNetwork &net);

constexpr std::size_t default_vertex_cap = 24;

/// Lazily enumerates the vertices of a cube in lexicographic order of their
/// string form.
class VertexRange {
public:
  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = State;
    using difference_type = std::ptrdiff_t;
    using pointer = const State *;
    using reference = const State &;

    iterator() = default;
    const State &operator*() const noexcept { return current_; }
    const State *operator->() const noexcept { return &current_; }
    iterator &operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator &a, const iterator &b) noexcept {
      return a.done_ == b.done_;
    }

  private:
    friend class VertexRange;
    iterator(const std::vector<std::size_t> *free, State first)
        : free_(free), current_(std::move(first)), done_(false) {}

    const std::vector<std::size_t> *free_ = nullptr;
    State current_;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return {}; }
  /// 2^(free components).
  std::uint64_t count() const noexcept { return std::uint64_t{1} << free_.size(); }

private:
  friend VertexRange vertices(const Cube &c, std::size_t cap);
  explicit VertexRange(const Cube &c);

  State first_;
  std::vector<std::size_t> free_;
};

/// Throws CapacityError when the cube has more than `cap` free components.
VertexRange vertices(const Cube &c, std::size_t cap = default_vertex_cap);

} // namespace bnkit
