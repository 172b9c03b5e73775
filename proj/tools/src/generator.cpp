#include "bnkit/cli/generator.hpp"

#include "bnkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace bnkit::cli {

namespace {

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, bound) by rejection, so results do not depend on the
  /// standard library's distribution implementations.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do
      r = rng_();
    while (r >= limit);
    return r % bound;
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

private:
  std::mt19937_64 rng_;
};

std::string component_name(std::size_t i, std::size_t n) {
  const std::size_t width = std::to_string(n > 0 ? n - 1 : 0).size();
  std::string digits = std::to_string(i);
  return "x" + std::string(width - digits.size(), '0') + digits;
}

std::string literal(const std::string &name, bool positive) {
  return positive ? name : "!" + name;
}

std::string join(const std::vector<std::string> &parts, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k)
      out += sep;
    out += parts[k];
  }
  return out;
}

} // namespace

std::string_view to_string(Family family) {
  return family == Family::inhibitor_dominant ? "inhibitor-dominant" : "nested-canalizing-unate";
}

Family parse_family(std::string_view text) {
  if (text == "inhibitor-dominant")
    return Family::inhibitor_dominant;
  if (text == "nested-canalizing-unate")
    return Family::nested_canalizing_unate;
  throw Error("unknown network family '" + std::string(text) + "'");
}

std::string generate_bnet(const GenSpec &spec) {
  if (spec.nodes == 0)
    throw Error("generated networks need at least one node");
  if (!(spec.gamma > 0.0))
    throw Error("power-law exponent must be positive");
  if (spec.max_in_degree == 0)
    throw Error("maximum in-degree must be positive");

  Sampler rng(spec.seed);
  const std::size_t n = spec.nodes;
  const std::size_t kmax = std::min(spec.max_in_degree, n);

  std::vector<double> cumulative(kmax);
  double total = 0.0;
  for (std::size_t k = 1; k <= kmax; ++k) {
    total += std::pow(static_cast<double>(k), -spec.gamma);
    cumulative[k - 1] = total;
  }

  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i)
    names[i] = component_name(i, n);

  // Each node appears once plus once per outgoing edge.
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i)
    pool[i] = i;

  std::string out = "targets, factors\n";
  std::vector<std::size_t> regulators;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.unit() * total;
    const std::size_t k =
        1 + static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) -
                                     cumulative.begin());
    const std::size_t degree = std::min(k, kmax);

    regulators.clear();
    while (regulators.size() < degree) {
      const std::size_t r = pool[rng.below(pool.size())];
      if (std::find(regulators.begin(), regulators.end(), r) == regulators.end())
        regulators.push_back(r);
    }
    std::sort(regulators.begin(), regulators.end());
    for (std::size_t r : regulators)
      pool.push_back(r);

    std::string fn;
    if (spec.family == Family::inhibitor_dominant) {
      std::vector<std::string> act, inh;
      for (std::size_t r : regulators)
        (rng.chance(spec.activator_ratio) ? act : inh).push_back(names[r]);
      std::string a = join(act, " | ");
      const std::string h = inh.size() == 1 ? "!" + inh[0] : "!(" + join(inh, " | ") + ")";
      if (act.size() > 1 && !inh.empty())
        a = "(" + a + ")";
      if (inh.empty())
        fn = a;
      else if (act.empty())
        fn = h;
      else
        fn = a + " & " + h;
    } else {
      std::vector<std::string> lits;
      std::vector<const char *> ops;
      for (std::size_t r : regulators) {
        lits.push_back(literal(names[r], rng.chance(spec.activator_ratio)));
        ops.push_back(rng.chance(0.5) ? " & " : " | ");
      }
      fn = lits.back();
      for (std::size_t j = lits.size() - 1; j-- > 0;)
        fn = lits[j] + ops[j] + (j + 2 == lits.size() ? fn : "(" + fn + ")");
    }
    out += names[i] + ", " + fn + "\n";
  }
  return out;
}

BooleanNetwork generate_network(const GenSpec &spec) { return parse_bnet(generate_bnet(spec)); }

} // namespace bnkit::cli
