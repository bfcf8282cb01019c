#include <random>

#include "doctest.h"
#include "graydist/classifier.hpp"
#include "graydist/suites.hpp"

using namespace graydist;

namespace {

// Oracle for the reindex of the cell classified by f : m -> n: the
// precomposition action on maps into the 2-chain, ordered by number of ones.
std::vector<int> reindex_oracle(const MonotoneMap& f) {
  std::vector<int> out;
  for (int ones = 0; ones <= f.cod.size; ++ones) {
    int count = 0;
    for (int v : f.values) count += v >= f.cod.size - ones;
    out.push_back(count);
  }
  return out;
}

}  // namespace

TEST_SUITE("classifier") {
  TEST_CASE("hom-set examples") {
    CHECK(hat_terminal_hom(2, 1).size() == 1);
    CHECK(hat_terminal_hom(0, 1).size() == 1);
    CHECK(hat_terminal_hom(2, 2).size() == 3);
    CHECK(hat_terminal_hom(1, 0).empty());
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n)
        CHECK(hat_terminal_hom(m, n).size() == (m == 0 ? 1 : binomial(m + n - 1, m)));
  }

  TEST_CASE("cells are classified through the duality") {
    const Presentation b = hat_base_terminal();
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n)
        for (const auto& f : enumerate_monotone(m, n)) {
          const HatTwoCell c = hat_terminal_cell(f);
          validate_hat_cell(b, c);
          CHECK(c.source.length() == m);
          CHECK(c.target.length() == n);
          CHECK(c.reindex.values() == reindex_oracle(f));
          CHECK(hat_terminal_classify(c) == f);
        }
  }

  TEST_CASE("vertical composition") {
    const Presentation b = hat_base_terminal();
    const MonotoneMap s3(3, 2, {0, 0, 1}), s2(2, 1, {0, 0});
    const HatTwoCell v = hat_vertical(b, hat_terminal_cell(s2), hat_terminal_cell(s3));
    CHECK(hat_terminal_classify(v) == compose(s2, s3));
    CHECK(v.reindex.values() == reindex_oracle(compose(s2, s3)));
    const HatTwoCell c = hat_terminal_cell(s3);
    CHECK(hat_cell_equal(hat_vertical(b, hat_identity(c.target), c), c));
    CHECK(hat_cell_equal(hat_vertical(b, c, hat_identity(c.source)), c));
    CHECK_THROWS(hat_vertical(b, c, c));
  }

  TEST_CASE("horizontal composition") {
    const Presentation b = hat_base_terminal();
    const MonotoneMap f(2, 1, {0, 0}), g(3, 2, {0, 1, 1});
    const HatTwoCell h = hat_horizontal(b, hat_terminal_cell(g), hat_terminal_cell(f));
    CHECK(h.source.length() == 5);
    CHECK(hat_terminal_classify(h) == ordinal_sum(f, g));
    const HatTwoCell unit = hat_identity(hat_terminal_one(0));
    CHECK(hat_cell_equal(hat_horizontal(b, unit, hat_terminal_cell(g)), hat_terminal_cell(g)));
    CHECK(hat_cell_equal(hat_horizontal(b, hat_terminal_cell(g), unit), hat_terminal_cell(g)));
  }

  TEST_CASE("suite passes") {
    const CheckReport r = classifier_suite(4, {writer(cyclic_monoid(2)), maybe(), identity_monad(), state(2)});
    INFO(r.summary());
    CHECK(r.pass());
  }

  TEST_CASE("hat of a monad on generators") {
    for (const auto& m : {writer(cyclic_monoid(2)), maybe(), reader(2)}) {
      const HatAssignment h = hat_of_monad(m);
      CHECK(morphism_equal(h(MonotoneMap(2, 1, {0, 0})), m.mult));
      CHECK(morphism_equal(h(MonotoneMap::empty_into(1)), m.unit));
      CHECK(morphism_equal(h(MonotoneMap::identity(1)), identity(m.functor)));
      const Morphism mu3 = h(MonotoneMap(3, 1, {0, 0, 0}));
      CHECK(morphism_equal(mu3, vertical(m.mult, whisker({}, m.mult, m.functor))));
      CHECK(morphism_equal(mu3, vertical(m.mult, whisker(m.functor, m.mult, {}))));
    }
  }

  TEST_CASE("hat of a monad is functorial on random pairs") {
    std::mt19937 rng(17);
    const std::vector<MonadData> ms{writer(cyclic_monoid(2)), maybe(), reader(2)};
    for (int trial = 0; trial < 30; ++trial) {
      const MonadData& m = ms[trial % ms.size()];
      const HatAssignment h = hat_of_monad(m);
      const int a = rng() % 5, b = 1 + rng() % 4, c = 1 + rng() % 4;
      const auto fs = enumerate_monotone(a, b), gs = enumerate_monotone(b, c);
      const MonotoneMap& f = fs[rng() % fs.size()];
      const MonotoneMap& g = gs[rng() % gs.size()];
      INFO(m.name << " " << to_string(g) << " after " << to_string(f));
      CHECK(morphism_equal(h(compose(g, f)), vertical(h(g), h(f))));
      CHECK(morphism_equal(h(ordinal_sum(f, g)), horizontal(h(f), h(g))));
    }
  }

  TEST_CASE("tilde after hat is the identity") {
    for (const auto& m : {writer(cyclic_monoid(2)), maybe(), identity_monad()}) {
      const MonadData back = tilde_of_assignment(hat_of_monad(m), m.name);
      CHECK(same_monad(back, m));
      CHECK(back.functor == m.functor);
    }
  }
}
