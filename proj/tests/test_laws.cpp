#include <random>
#include <set>

#include "doctest.h"
#include "graydist/laws.hpp"
#include "graydist/parametric.hpp"
#include "graydist/suites.hpp"

using namespace graydist;

namespace {

CheckOptions fast() {
  CheckOptions o;
  o.oracle = false;
  return o;
}

// phi(a, b) = (b, a+1) on writer(Z2).writer(Z2).
Morphism sigma_flip() {
  const Container w = writer(cyclic_monoid(2)).functor;
  return from_function(
      w * w, w * w, [](const Tree& x) { return Tree{x.kids[0].value, {Tree{(x.value + 1) % 2, {x.kids[0].kids[0]}}}}; },
      "sigma-flip");
}

NFoldSystem triple(const MonadData& t3) {
  NFoldSystem s;
  s.n = 3;
  const MonadData e = either(1), w = writer(cyclic_monoid(2));
  s.monads = {e, w, t3};
  s.laws.emplace(std::make_pair(1, 2), deither(1, w));
  s.laws.emplace(std::make_pair(1, 3), deither(1, t3));
  s.laws.emplace(std::make_pair(2, 3), dwriter(cyclic_monoid(2), t3));
  return s;
}

std::set<std::string> failing(const CheckReport& r) {
  const auto v = r.failing_tags();
  return {v.begin(), v.end()};
}

}  // namespace

TEST_SUITE("laws") {
  TEST_CASE("canonical laws pass all four axioms with oracle agreement") {
    for (const auto& d : {dwriter(cyclic_monoid(2), maybe()), deither(1, writer(cyclic_monoid(3))),
                          dwriter(cyclic_monoid(2), state(2)), deither(1, reader(2))}) {
      const CheckReport r = check_dist_law(d);
      INFO(law_name(d) << "\n" << r.summary());
      CHECK(r.pass());
      CHECK(r.instances.size() == 4);
      for (const auto& i : r.instances) CHECK(i.oracle_agrees);
    }
  }

  TEST_CASE("single-entry mutations include single-axiom failures with witnesses") {
    for (const auto& d : {dwriter(cyclic_monoid(2), maybe()), deither(1, writer(cyclic_monoid(2))), deither(2, reader(2))}) {
      int single = 0;
      for (const Morphism& mut : law_mutations(d.law)) {
        const CheckReport r = check_dist_law({d.first, d.second, mut});
        CHECK_FALSE(r.pass());
        const auto f = failing(r);
        for (const auto& tag : f) {
          CHECK_FALSE(r.find(tag)->witness.empty());
          CHECK(r.find(tag)->oracle_agrees);
        }
        if (f.size() == 1) ++single;
      }
      CHECK(single > 0);
    }
  }

  TEST_CASE("boundary validation") {
    DistLawData d = dwriter(cyclic_monoid(2), maybe());
    d.law = identity(d.first.functor * d.second.functor);
    CHECK_THROWS_AS(check_dist_law(d), BoundaryMismatch);
  }

  TEST_CASE("composite monad") {
    const DistLawData d = dwriter(cyclic_monoid(2), maybe());
    const MonadData c = compose_via_law(d);
    CHECK(c.functor.shape_count() == 3);
    CHECK(check_monad(c).pass());
    for (std::uint64_t x = 0; x <= 3; ++x)
      CHECK(eval_on_set(c.functor, x) == eval_on_set(d.first.functor, eval_on_set(d.second.functor, x)));
    CHECK(composition_suite(d).pass());
  }

  TEST_CASE("composite with the identity monad is the first monad") {
    const MonadData t = state(2), i = identity_monad();
    const DistLawData d{t, i, identity(t.functor)};
    CHECK(check_dist_law(d).pass());
    const MonadData c = compose_via_law(d);
    CHECK(c.functor == t.functor);
    CHECK(morphism_equal(c.unit, t.unit));
    CHECK(morphism_equal(c.mult, t.mult));
  }

  TEST_CASE("soundness ladder on random mutations") {
    int checked = 0;
    for (const auto& d : {dwriter(cyclic_monoid(2), maybe()), deither(1, writer(cyclic_monoid(2))), deither(1, maybe()),
                          deither(2, reader(2)), dwriter(boolean_and(), either(2))}) {
      for (const Morphism& mut : law_mutations(d.law)) {
        const DistLawData m{d.first, d.second, mut};
        const bool premise = check_dist_law(m, fast()).pass();
        const bool conclusion = check_monad(compose_via_law(m), fast()).pass();
        CHECK((!premise || conclusion));
        ++checked;
      }
    }
    CHECK(checked >= 20);
  }

  TEST_CASE("monads in Mnd") {
    const DistLawData d = dwriter(cyclic_monoid(2), maybe());
    const MonadInMnd enc = encode_as_monad_in_mnd(d);
    CHECK(same_dist_law(decode_from_monad_in_mnd(enc), d));
    CHECK(check_monad_in_mnd(enc).pass());
    const MonadData i = identity_monad();
    const MonadInMnd triv = encode_as_monad_in_mnd({i, i, identity(Container{})});
    CHECK(check_monad_in_mnd(triv).pass());
    CHECK(mnd_in_mnd_suite(d, true, fast()).pass());
  }

  TEST_CASE("condition correspondence on single-axiom mutants") {
    for (const auto& d : {dwriter(cyclic_monoid(2), maybe()), deither(1, reader(2))}) {
      const MutationStats st = mnd_mutation_stats(d, fast());
      INFO(law_name(d) << " first mismatch " << st.first_mismatch);
      CHECK(st.single_axiom > 0);
      CHECK(st.matched == st.single_axiom);
    }
    CHECK(dist_axiom_for_mnd_condition("mnd.monad.assoc").empty());
  }

  TEST_CASE("projections") {
    const DistLawData d = dwriter(cyclic_monoid(2), maybe());
    CHECK(same_monad(dist_projection(d, Projection::u1), writer(cyclic_monoid(2))));
    CHECK(same_monad(dist_projection(d, Projection::u2), maybe()));
    const MonadData c = dist_projection(d, Projection::c), direct = compose_via_law(d);
    CHECK(c.functor == direct.functor);
    CHECK(morphism_equal(c.mult, direct.mult));
    const MonadMorphismData ci = dist_projection_on_morphism(identity_dist_morphism(d), Projection::c);
    CHECK(ci.carrier.is_identity());
    CHECK(morphism_equal(ci.phi, identity(c.functor)));
  }

  TEST_CASE("monad morphisms") {
    const MonadData w = writer(cyclic_monoid(2)), mb = maybe(), i = identity_monad();
    CHECK(check_monad_morphism(w, w, identity_monad_morphism(w)).pass());
    // (Id, eta) : maybe -> identity.
    CHECK(check_monad_morphism(mb, i, {Container{}, mb.unit}).pass());
    const CheckReport flip = check_monad_morphism(w, w, {w.functor, sigma_flip()});
    CHECK_FALSE(flip.pass());
    CHECK_FALSE(flip.failing_tags().empty());
    CHECK_THROWS_AS(check_monad_morphism(w, mb, identity_monad_morphism(w)), BoundaryMismatch);
  }

  TEST_CASE("dist morphisms") {
    const DistLawData d = dwriter(cyclic_monoid(2), maybe());
    CHECK(check_dist_morphism(d, d, identity_dist_morphism(d)).pass());
    // phi shifted by one on the writer component.
    const Container w = d.second.functor;
    DistMorphismData bad = identity_dist_morphism(d);
    bad.phi = from_function(w, w, [](const Tree& x) { return Tree{(x.value + 1) % 2, x.kids}; }, "shift");
    const CheckReport r = check_dist_morphism(d, d, bad);
    // The shift is not unital, but it commutes with the law.
    CHECK_FALSE(r.find("distmor.a.unit")->pass);
    CHECK(r.find("distmor.b.unit")->pass);
    CHECK(r.find("distmor.c")->pass);
  }

  TEST_CASE("yang-baxter") {
    for (const auto& t : {maybe(), reader(2)}) {
      const NFoldSystem s = triple(t);
      const CheckReport r = check_yang_baxter(s.law(1, 2).law, s.law(1, 3).law, s.law(2, 3).law, s.monads[0],
                                              s.monads[1], s.monads[2]);
      CHECK(r.pass());
    }
    const MonadData i = identity_monad();
    const Morphism id0 = identity(Container{});
    CHECK(check_yang_baxter(id0, id0, id0, i, i, i).pass());
  }

  TEST_CASE("yang-baxter detects corrupted laws") {
    const NFoldSystem s = triple(maybe());
    int detected = 0;
    for (auto key : {std::make_pair(1, 2), std::make_pair(1, 3), std::make_pair(2, 3)}) {
      for (const Morphism& mut : law_mutations(s.law(key.first, key.second).law)) {
        NFoldSystem c = s;
        c.laws.at(key).law = mut;
        const CheckReport r =
            check_yang_baxter(c.law(1, 2).law, c.law(1, 3).law, c.law(2, 3).law, c.monads[0], c.monads[1], c.monads[2]);
        if (!r.pass()) {
          ++detected;
          CHECK_FALSE(r.instances.front().witness.empty());
        }
      }
    }
    CHECK(detected > 0);
  }

  TEST_CASE("n-fold systems") {
    NFoldSystem two;
    two.n = 2;
    const DistLawData d = dwriter(cyclic_monoid(2), maybe());
    two.monads = {d.second, d.first};
    two.laws.emplace(std::make_pair(1, 2), d);
    const CheckReport r2 = check_nfold(two);
    CHECK(r2.pass());
    CHECK(r2.instances.size() == 3 + 3 + 4);

    NFoldSystem three = triple(writer(cyclic_monoid(3)));
    const CheckReport r3 = check_nfold(three);
    INFO(r3.summary());
    CHECK(r3.pass());
    std::set<std::string> suites;
    for (const auto& i : r3.instances) suites.insert(i.tag.substr(0, i.tag.find('/')));
    CHECK(suites.size() == 3 + 3 + 1);

    NFoldSystem wrong = three;
    std::swap(wrong.monads[0], wrong.monads[1]);
    CHECK_THROWS(validate_nfold(wrong));
  }

  TEST_CASE("corrupting one crossing fails only the suites naming it") {
    const NFoldSystem s = triple(maybe());
    for (auto key : {std::make_pair(1, 2), std::make_pair(1, 3), std::make_pair(2, 3)}) {
      const std::string law = "law(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")";
      int tried = 0;
      for (const Morphism& mut : law_mutations(s.law(key.first, key.second).law)) {
        NFoldSystem c = s;
        c.laws.at(key).law = mut;
        if (check_dist_law(c.law(key.first, key.second), fast()).pass()) continue;
        for (const auto& tag : check_nfold(c, fast()).failing_tags()) {
          const std::string suite = tag.substr(0, tag.find('/'));
          CHECK((suite == law || suite == "yang-baxter(1,2,3)"));
        }
        ++tried;
      }
      CHECK(tried > 0);
    }
  }
}
