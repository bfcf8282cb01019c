#include "graydist/ordinals.hpp"

#include <sstream>

namespace graydist {

MonotoneMap::MonotoneMap(int dom_size, int cod_size, std::vector<int> vals)
    : dom{dom_size}, cod{cod_size}, values(std::move(vals)) {
  if (dom_size < 0 || cod_size < 0) throw OrdinalError("negative ordinal size");
  if (static_cast<int>(values.size()) != dom_size) throw OrdinalError("value count does not match domain");
  for (int v : values)
    if (v < 0 || v >= cod_size) throw OrdinalError("value outside codomain");
  if (!is_monotone()) throw OrdinalError("map is not monotone");
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return MonotoneMap(n, n, std::move(v));
}

MonotoneMap MonotoneMap::empty_into(int cod_size) { return MonotoneMap(0, cod_size, {}); }

bool MonotoneMap::is_monotone() const {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i - 1] > values[i]) return false;
  return true;
}

IntervalMap::IntervalMap(MonotoneMap m) : underlying(std::move(m)) {
  if (underlying.dom.size < 1 || underlying.cod.size < 1) throw OrdinalError("interval map needs nonempty chains");
  if (underlying.values.front() != 0) throw OrdinalError("interval map must preserve the bottom");
  if (underlying.values.back() != underlying.cod.size - 1) throw OrdinalError("interval map must preserve the top");
}

MonotoneMap generator(GeneratorKind kind, int n, int k) {
  if (n < 0 || k < 0 || k > n) throw OrdinalError("generator index out of range");
  if (kind == GeneratorKind::delta) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i < k ? i : i + 1;
    return MonotoneMap(n, n + 1, std::move(v));
  }
  std::vector<int> v(n + 2);
  for (int i = 0; i < n + 2; ++i) v[i] = i <= k ? i : i - 1;
  return MonotoneMap(n + 2, n + 1, std::move(v));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.cod != g.dom) throw OrdinalError("domain mismatch in composition");
  std::vector<int> v(f.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.values[f.values[i]];
  return MonotoneMap(f.dom.size, g.cod.size, std::move(v));
}

IntervalMap compose(const IntervalMap& g, const IntervalMap& f) {
  return IntervalMap(compose(g.underlying, f.underlying));
}

MonotoneMap ordinal_sum(const MonotoneMap& f, const MonotoneMap& g) {
  std::vector<int> v = f.values;
  for (int x : g.values) v.push_back(x + f.cod.size);
  return MonotoneMap(f.dom.size + g.dom.size, f.cod.size + g.cod.size, std::move(v));
}

// Hom-set into the 2-chain: a monotone map from a B-chain to {0,1} is fixed by
// how many of its top elements go to 1, giving a chain of B+1 elements.
IntervalMap dualize(const MonotoneMap& f) {
  const int a = f.dom.size, b = f.cod.size;
  std::vector<int> v(b + 1);
  for (int i = 0; i <= b; ++i) {
    int count = 0;
    for (int x : f.values)
      if (x >= b - i) ++count;
    v[i] = count;
  }
  return IntervalMap(MonotoneMap(b + 1, a + 1, std::move(v)));
}

MonotoneMap undualize(const IntervalMap& alpha) {
  const int b = alpha.dom_size() - 1, a = alpha.cod_size() - 1;
  std::vector<int> v(a);
  for (int x = 0; x < a; ++x) {
    int i = 0;
    while (alpha.values()[i] < a - x) ++i;
    v[x] = b - i;
  }
  return MonotoneMap(a, b, std::move(v));
}

std::vector<int> fiber_profile(const MonotoneMap& f) {
  std::vector<int> p(f.cod.size, 0);
  for (int x : f.values) ++p[x];
  return p;
}

namespace {
void extend(int m, int n, int lo, std::vector<int>& cur, std::vector<MonotoneMap>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.emplace_back(m, n, cur);
    return;
  }
  for (int v = lo; v < n; ++v) {
    cur.push_back(v);
    extend(m, n, v, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<MonotoneMap> enumerate_monotone(int m, int n) {
  std::vector<MonotoneMap> out;
  std::vector<int> cur;
  extend(m, n, 0, cur, out);
  return out;
}

std::vector<IntervalMap> enumerate_interval(int m, int n) {
  std::vector<IntervalMap> out;
  if (m < 1 || n < 1) return out;
  for (auto& f : enumerate_monotone(m, n))
    if (f.values.front() == 0 && f.values.back() == n - 1) out.emplace_back(f);
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string to_string(const MonotoneMap& f) {
  std::ostringstream os;
  os << '[' << f.dom.size - 1 << "]->[" << f.cod.size - 1 << "]: (";
  for (std::size_t i = 0; i < f.values.size(); ++i) os << (i ? "," : "") << f.values[i];
  os << ')';
  return os.str();
}

}  // namespace graydist
