#include <set>

#include "doctest.h"
#include "graydist/ordinals.hpp"

using namespace graydist;

namespace {

// Oracle: precomposition action on Hom(-, 2-chain) computed by enumerating
// monotone maps into {0,1} as 0/1 vectors, ordered by number of ones.
std::vector<int> precompose_action(const MonotoneMap& f) {
  const int a = f.dom.size, b = f.cod.size;
  std::vector<int> out;
  for (int ones = 0; ones <= b; ++ones) {
    std::vector<int> chi(b);
    for (int j = 0; j < b; ++j) chi[j] = j >= b - ones ? 1 : 0;
    int count = 0;
    for (int x = 0; x < a; ++x) count += chi[f.values[x]];
    out.push_back(count);
  }
  return out;
}

std::uint64_t count_monotone_brute(int m, int n) {
  if (m == 0) return 1;
  if (n == 0) return 0;
  std::uint64_t total = 0;
  std::vector<int> v(m, 0);
  while (true) {
    bool mono = true;
    for (int i = 1; i < m; ++i) mono = mono && v[i - 1] <= v[i];
    total += mono;
    int k = 0;
    while (k < m && ++v[k] == n) v[k++] = 0;
    if (k == m) break;
  }
  return total;
}

}  // namespace

TEST_SUITE("ordinals") {
  TEST_CASE("generator examples") {
    CHECK(generator(GeneratorKind::delta, 1, 0).values == std::vector<int>{1});
    CHECK(generator(GeneratorKind::sigma, 0, 0).values == std::vector<int>{0, 0});
    CHECK(generator(GeneratorKind::delta, 2, 2).values == std::vector<int>{0, 1});
    CHECK_THROWS_AS(generator(GeneratorKind::delta, 1, 2), OrdinalError);
    CHECK_THROWS_AS(generator(GeneratorKind::sigma, -1, 0), OrdinalError);
  }

  TEST_CASE("delta misses k, sigma identifies k and k+1") {
    for (int n = 0; n <= 5; ++n)
      for (int k = 0; k <= n; ++k) {
        const auto d = generator(GeneratorKind::delta, n, k);
        CHECK(d.dom.size == n);
        CHECK(d.cod.size == n + 1);
        std::set<int> img(d.values.begin(), d.values.end());
        CHECK(img.size() == static_cast<std::size_t>(n));
        CHECK(img.count(k) == 0);
        const auto s = generator(GeneratorKind::sigma, n, k);
        CHECK(s.values[k] == k);
        CHECK(s.values[k + 1] == k);
        CHECK(std::set<int>(s.values.begin(), s.values.end()).size() == static_cast<std::size_t>(n + 1));
      }
  }

  TEST_CASE("compose examples") {
    const auto s = generator(GeneratorKind::sigma, 0, 0);
    CHECK(compose(s, generator(GeneratorKind::delta, 1, 0)) == MonotoneMap::identity(1));
    CHECK(compose(s, generator(GeneratorKind::delta, 1, 1)) == MonotoneMap::identity(1));
    const MonotoneMap f(3, 2, {0, 0, 1});
    CHECK(compose(MonotoneMap::identity(2), f) == f);
    CHECK(compose(f, MonotoneMap::identity(3)) == f);
    CHECK_THROWS_AS(compose(f, f), OrdinalError);
  }

  TEST_CASE("constructor rejects non-monotone and out-of-range maps") {
    CHECK_THROWS_AS(MonotoneMap(2, 2, {1, 0}), OrdinalError);
    CHECK_THROWS_AS(MonotoneMap(1, 1, {1}), OrdinalError);
    CHECK_THROWS_AS(MonotoneMap(2, 2, {0}), OrdinalError);
    CHECK_THROWS_AS(IntervalMap(MonotoneMap(2, 2, {0, 0})), OrdinalError);
    CHECK_THROWS_AS(IntervalMap(MonotoneMap(2, 2, {1, 1})), OrdinalError);
  }

  TEST_CASE("simplicial identities") {
    using K = GeneratorKind;
    auto d = [](int n, int k) { return generator(K::delta, n, k); };
    auto s = [](int n, int k) { return generator(K::sigma, n, k); };
    for (int n = 0; n <= 5; ++n) {
      // delta_l o delta_k = delta_k o delta_(l-1), k < l
      for (int l = 1; l <= n + 1; ++l)
        for (int k = 0; k < l; ++k) CHECK(compose(d(n + 1, l), d(n, k)) == compose(d(n + 1, k), d(n, l - 1)));
      // sigma_l o sigma_k = sigma_k o sigma_(l+1), k <= l
      for (int l = 0; l <= n; ++l)
        for (int k = 0; k <= l; ++k) CHECK(compose(s(n, l), s(n + 1, k)) == compose(s(n, k), s(n + 1, l + 1)));
      // mixed identities on [n] -> [n]: sigma^n_j after delta^(n+1)_i, maps (n+1) -> (n+1)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          const auto lhs = compose(s(n, j), d(n + 1, i));
          if (i < j) {
            CHECK(lhs == compose(d(n, i), s(n - 1, j - 1)));
          } else if (i == j || i == j + 1) {
            CHECK(lhs == MonotoneMap::identity(n + 1));
          } else {
            CHECK(lhs == compose(d(n, i - 1), s(n - 1, j)));
          }
        }
    }
  }

  TEST_CASE("ordinal sum examples and laws") {
    CHECK(ordinal_sum(MonotoneMap::identity(1), MonotoneMap::identity(1)) == MonotoneMap::identity(2));
    CHECK(ordinal_sum(generator(GeneratorKind::delta, 1, 0), MonotoneMap::identity(1)).values ==
          std::vector<int>{1, 2});
    CHECK(ordinal_sum(MonotoneMap::empty_into(1), MonotoneMap::identity(1)).values == std::vector<int>{1});
    const MonotoneMap e = MonotoneMap::empty_into(0);
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (const auto& f : enumerate_monotone(a, b)) {
          CHECK(ordinal_sum(e, f) == f);
          CHECK(ordinal_sum(f, e) == f);
          for (const auto& g : enumerate_monotone(b % 3, a % 3))
            for (const auto& h : enumerate_monotone(1, 2))
              CHECK(ordinal_sum(ordinal_sum(f, g), h) == ordinal_sum(f, ordinal_sum(g, h)));
        }
  }

  TEST_CASE("dualize examples") {
    CHECK(dualize(MonotoneMap::identity(1)) == IntervalMap(MonotoneMap::identity(2)));
    CHECK(dualize(generator(GeneratorKind::delta, 1, 0)).values() == std::vector<int>{0, 1, 1});
    CHECK(enumerate_monotone(1, 2).size() == 2);
  }

  TEST_CASE("dualize matches the precomposition oracle") {
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= 5; ++b)
        for (const auto& f : enumerate_monotone(a, b)) CHECK(dualize(f).values() == precompose_action(f));
  }

  TEST_CASE("hom-set cardinalities") {
    for (int m = 0; m <= 5; ++m)
      for (int n = 0; n <= 5; ++n) {
        const auto count = enumerate_monotone(m, n).size();
        CHECK(count == count_monotone_brute(m, n));
        CHECK(count == (m == 0 ? 1 : binomial(m + n - 1, m)));
        CHECK(enumerate_interval(n + 1, m + 1).size() == count);
      }
  }

  TEST_CASE("fiber profile") {
    CHECK(fiber_profile(generator(GeneratorKind::sigma, 0, 0)) == std::vector<int>{2});
    CHECK(fiber_profile(MonotoneMap::identity(2)) == std::vector<int>{1, 1});
    CHECK(fiber_profile(MonotoneMap::empty_into(1)) == std::vector<int>{0});
    // f is the ordinal sum of the maps onto a point with the profile's fibers.
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b)
        for (const auto& f : enumerate_monotone(a, b)) {
          MonotoneMap acc = MonotoneMap::empty_into(0);
          for (int k : fiber_profile(f)) acc = ordinal_sum(acc, MonotoneMap(k, 1, std::vector<int>(k, 0)));
          CHECK(acc == f);
        }
  }

  TEST_CASE("pretty printer") {
    CHECK(to_string(MonotoneMap(3, 2, {0, 0, 1})) == "[2]->[1]: (0,0,1)");
    CHECK(to_string(MonotoneMap::empty_into(1)) == "[-1]->[0]: ()");
  }
}
