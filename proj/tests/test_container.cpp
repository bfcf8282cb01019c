#include <random>

#include "doctest.h"
#include "graydist/container.hpp"
#include "graydist/laws.hpp"
#include "graydist/monads.hpp"
#include "graydist/parametric.hpp"
#include "graydist/suites.hpp"

using namespace graydist;

namespace {

std::vector<MonadData> builtins() {
  return {writer(cyclic_monoid(2)), writer(cyclic_monoid(3)), writer(boolean_and()), either(1), either(2),
          maybe(),                  reader(2),                state(2),                identity_monad()};
}

// Oracle for |F(X)|: sum over shapes of |X|^arity, layer by layer from the inside.
std::uint64_t size_oracle(const Container& f, std::uint64_t x) {
  std::uint64_t n = x;
  for (std::size_t d = f.length(); d-- > 0;) {
    std::uint64_t total = 0;
    for (auto a : f.layer(d).arity) {
      std::uint64_t p = 1;
      for (std::uint32_t i = 0; i < a; ++i) p *= n;
      total += p;
    }
    n = total;
  }
  return n;
}

std::size_t max_arity(const Container& f) {
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < f.shape_count(); ++s) best = std::max(best, leaf_count(generic_tree(f, s), f.length()));
  return best;
}

Morphism writer_mult_table(std::uint32_t n, std::uint32_t coeff) {
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) rows[a][b] = (a + coeff * b) % n;
  return writer(MonoidTable::unchecked("bad", n, 0, rows)).mult;
}

}  // namespace

TEST_SUITE("container") {
  TEST_CASE("composite shape counts") {
    const Container w = writer(cyclic_monoid(2)).functor, mb = maybe().functor;
    CHECK((w * w).shape_count() == 4);
    CHECK((mb * mb).shape_count() == 3);
    CHECK((Container{} * w) == w);
    CHECK(((w * mb) * w) == (w * (mb * w)));
  }

  TEST_CASE("eval_on_set examples") {
    CHECK(eval_on_set(writer(cyclic_monoid(2)).functor, 3) == 6);
    CHECK(eval_on_set(state(2).functor, 2) == 16);
    CHECK(eval_on_set(maybe().functor, 0) == 1);
    CHECK(eval_on_set(either(2).functor, 0) == 2);
    CHECK(eval_on_set(reader(2).functor, 0) == 0);
  }

  TEST_CASE("sizes agree with the oracle and compose as F(G(X))") {
    const auto ms = builtins();
    for (const auto& a : ms)
      for (const auto& b : ms)
        for (std::uint64_t x = 0; x <= 3; ++x) {
          const Container c = a.functor * b.functor;
          CHECK(eval_on_set(c, x) == size_oracle(c, x));
          CHECK(eval_on_set(c, x) == eval_on_set(a.functor, eval_on_set(b.functor, x)));
        }
  }

  TEST_CASE("tree codec round trip") {
    const Container f = writer(cyclic_monoid(2)).functor * maybe().functor * reader(2).functor;
    for (std::uint64_t z = 0; z <= 3; ++z) {
      TreeCodec c(f, z);
      CHECK(c.size() == size_oracle(f, z));
      for (std::uint64_t i = 0; i < c.size(); ++i) {
        const Tree t = c.decode(i);
        CHECK(tree_valid(f, t, z));
        CHECK(c.encode(t) == i);
      }
    }
  }

  TEST_CASE("morphism equality examples") {
    const MonadData w3 = writer(cyclic_monoid(3));
    CHECK(morphism_equal(w3.mult, w3.mult));
    CHECK_FALSE(morphism_equal(w3.mult, writer_mult_table(3, 2)));
    // maybe's multiplication written as an explicit table on Nothing, Just Nothing, Just Just.
    const MonadData mb = maybe();
    MorphismTable t{mb.functor * mb.functor, mb.functor, {0, 0, 1}, {{}, {}, {0}}};
    CHECK(morphism_equal(mb.mult, make_table(t, "mu-table")));
    CHECK_THROWS_AS(require_same_boundary(mb.mult, w3.mult), BoundaryMismatch);
  }

  TEST_CASE("writer mult table is addition") {
    const MonadData w = writer(cyclic_monoid(2));
    const MorphismTable& t = table_of(w.mult);
    for (std::uint32_t a = 0; a < 2; ++a)
      for (std::uint32_t b = 0; b < 2; ++b) {
        const Tree in{a, {Tree{b, {Tree{0, {}}}}}};
        CHECK(t.shape_map[TreeCodec(w.functor * w.functor, 1).encode(in)] == (a + b) % 2);
      }
  }

  TEST_CASE("maybe multiplication pointwise") {
    const MonadData m = maybe();
    for (std::uint64_t x = 0; x <= 3; ++x) {
      const auto mu = *eval_morphism_on_set(m.mult, x);
      TreeCodec outer(m.functor * m.functor, x), inner(m.functor, x);
      for (std::uint64_t e = 0; e < outer.size(); ++e) {
        const Tree t = outer.decode(e);
        Tree expect{0, {}};  // Nothing unless Just (Just v)
        if (t.value == 1 && t.kids[0].value == 1) expect = Tree{1, {t.kids[0].kids[0]}};
        CHECK(mu[e] == inner.encode(expect));
      }
    }
  }

  TEST_CASE("flat serial, flat parallel and lazy equality agree") {
    const DistLawData d = dwriter(cyclic_monoid(2), maybe());
    const Container t2 = d.second.functor;
    const Morphism base = vertical(d.law, whisker(t2, d.first.mult, Container{}));
    for (const Morphism& mut : law_mutations(d.law)) {
      const Morphism other = vertical(mut, whisker(t2, d.first.mult, Container{}));
      const auto a = equal_flat_serial(base, other), b = equal_flat_parallel(base, other), c = equal_lazy(base, other);
      CHECK(a.equal == b.equal);
      CHECK(a.equal == c.equal);
      REQUIRE(a.witnesses.size() == b.witnesses.size());
      for (std::size_t i = 0; i < a.witnesses.size(); ++i) CHECK(a.witnesses[i].nodes == b.witnesses[i].nodes);
    }
  }

  TEST_CASE("equality agrees with pointwise evaluation at max arity + 1") {
    for (const auto& d : {dwriter(cyclic_monoid(2), reader(2)), deither(2, maybe()), dwriter(boolean_and(), maybe())})
      for (const Morphism& mut : law_mutations(d.law)) {
        const std::uint64_t x = max_arity(d.law->src) + 1;
        const bool pointwise = *eval_morphism_on_set(d.law, x) == *eval_morphism_on_set(mut, x);
        CHECK(pointwise == morphism_equal(d.law, mut));
      }
  }

  TEST_CASE("evaluation is natural") {
    std::mt19937 rng(7);
    for (const auto& m : builtins()) {
      const Container tt = m.functor * m.functor;
      std::vector<std::vector<std::uint64_t>> mults;
      for (std::uint64_t x = 0; x <= 3; ++x) mults.push_back(*eval_morphism_on_set(m.mult, x));
      for (std::uint64_t x = 0; x <= 3; ++x)
        for (std::uint64_t y = 1; y <= 3; ++y)
          for (int sample = 0; sample < 10; ++sample) {
            std::vector<std::uint64_t> h(x);
            for (auto& v : h) v = rng() % y;
            const auto lhs_in = functor_action(tt, h, x, y);
            const auto& ax = mults[x];
            const auto& ay = mults[y];
            const auto th = functor_action(m.functor, h, x, y);
            for (std::size_t e = 0; e < ax.size(); ++e) CHECK(ay[lhs_in[e]] == th[ax[e]]);
          }
    }
  }

  TEST_CASE("strength examples") {
    // maybe: (a, Nothing) goes to Nothing; (a, Just b) to Just (a, b).
    const Container mb = maybe().functor;
    const auto s = strength(mb, 2, 3);
    TreeCodec fb(mb, 3), fab(mb, 6);
    for (std::uint64_t a = 0; a < 2; ++a)
      for (std::uint64_t e = 0; e < fb.size(); ++e) {
        const Tree in = fb.decode(e);
        const Tree out = fab.decode(s[a * fb.size() + e]);
        CHECK(out.value == in.value);
        if (in.value == 1) CHECK(out.kids[0].value == a * 3 + in.kids[0].value);
      }
    // writer: (a, (m, b)) goes to (m, (a, b)).
    const Container w = writer(cyclic_monoid(3)).functor;
    const auto sw = strength(w, 2, 2);
    TreeCodec wb(w, 2), wab(w, 4);
    for (std::uint64_t a = 0; a < 2; ++a)
      for (std::uint64_t e = 0; e < wb.size(); ++e) {
        const Tree in = wb.decode(e), out = wab.decode(sw[a * wb.size() + e]);
        CHECK(out.value == in.value);
        CHECK(out.kids[0].value == a * 2 + in.kids[0].value);
      }
    // identity: plain pairing.
    const auto si = strength(Container{}, 2, 3);
    for (std::uint64_t i = 0; i < si.size(); ++i) CHECK(si[i] == i);
  }

  TEST_CASE("strength and enrichment round trip for builtins") {
    for (const auto& m : builtins()) {
      const CheckReport r = strength_enrichment_roundtrip(m.functor, 3);
      INFO(r.summary());
      CHECK(r.pass());
      CHECK(r.find("strength.unit"));
      CHECK(r.find("strength.assoc"));
    }
  }

  TEST_CASE("saturating arithmetic") {
    CHECK(sat_mul(kSaturated, 2) == kSaturated);
    CHECK(sat_add(kSaturated - 1, 5) == kSaturated);
    CHECK(sat_pow(2, 10) == 1024);
    CHECK(sat_pow(2, 80) == kSaturated);
  }
}
