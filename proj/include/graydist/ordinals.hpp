#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace graydist {

// A finite ordinal stored by cardinality; size 0 is the empty ordinal.
struct Ordinal {
  int size = 0;
  friend bool operator==(const Ordinal&, const Ordinal&) = default;
};

class OrdinalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MonotoneMap {
  Ordinal dom;
  Ordinal cod;
  std::vector<int> values;

  MonotoneMap() = default;
  MonotoneMap(int dom_size, int cod_size, std::vector<int> vals);

  static MonotoneMap identity(int n);
  static MonotoneMap empty_into(int cod_size);

  bool is_monotone() const;
  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
};

// Interval map: a monotone map between nonempty chains fixing bottom and top.
struct IntervalMap {
  MonotoneMap underlying;

  explicit IntervalMap(MonotoneMap m);
  int dom_size() const { return underlying.dom.size; }
  int cod_size() const { return underlying.cod.size; }
  const std::vector<int>& values() const { return underlying.values; }
  friend bool operator==(const IntervalMap&, const IntervalMap&) = default;
};

enum class GeneratorKind { delta, sigma };

MonotoneMap generator(GeneratorKind kind, int n, int k);
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);
IntervalMap compose(const IntervalMap& g, const IntervalMap& f);
MonotoneMap ordinal_sum(const MonotoneMap& f, const MonotoneMap& g);
IntervalMap dualize(const MonotoneMap& f);
// Inverse of dualize on hom-sets.
MonotoneMap undualize(const IntervalMap& a);
std::vector<int> fiber_profile(const MonotoneMap& f);

// All monotone maps from an m-element chain to an n-element chain, lexicographic.
std::vector<MonotoneMap> enumerate_monotone(int m, int n);
// All interval maps from an m-element chain to an n-element chain.
std::vector<IntervalMap> enumerate_interval(int m, int n);

std::uint64_t binomial(int n, int k);

// "[2]->[1]: (0,0,1)" using the shifted bracket notation.
std::string to_string(const MonotoneMap& f);

}  // namespace graydist
