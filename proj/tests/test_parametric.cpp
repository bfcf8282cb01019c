#include "doctest.h"
#include "graydist/parametric.hpp"

using namespace graydist;

namespace {

// maybe -> either(2): Nothing goes to the first exception.
Morphism maybe_to_either2() {
  const Container mb = maybe().functor, e2 = either(2).functor;
  return from_function(mb, e2, [](const Tree& x) { return x.value == 0 ? Tree{0, {}} : Tree{2, x.kids}; }, "inl-exc");
}

}  // namespace

TEST_SUITE("parametric") {
  TEST_CASE("dwriter on maybe unrolls the strength") {
    const DistLawData d = dwriter(cyclic_monoid(2), maybe());
    CHECK(graydist::apply(d.law, Tree{1, {Tree{0, {}}}}) == Tree{0, {}});
    CHECK(graydist::apply(d.law, Tree{1, {Tree{1, {Tree{7, {}}}}}}) == Tree{1, {Tree{1, {Tree{7, {}}}}}});
    CHECK(check_dist_law(d).pass());
  }

  TEST_CASE("dwriter on the identity is the identity") {
    const DistLawData d = dwriter(cyclic_monoid(3), identity_monad());
    CHECK(morphism_equal(d.law, identity(d.second.functor)));
  }

  TEST_CASE("dwriter on state(2) passes") {
    CheckOptions o;
    o.max_set_size = 2;
    CHECK(check_dist_law(dwriter(cyclic_monoid(2), state(2)), o).pass());
  }

  TEST_CASE("deither examples") {
    const DistLawData d = deither(1, writer(cyclic_monoid(2)));
    // Left a goes to (unit, Left a); Right (m, b) to (m, Right b).
    CHECK(graydist::apply(d.law, Tree{0, {}}) == Tree{0, {Tree{0, {}}}});
    CHECK(graydist::apply(d.law, Tree{1, {Tree{1, {Tree{5, {}}}}}}) == Tree{1, {Tree{1, {Tree{5, {}}}}}});
    CHECK(check_dist_law(d).pass());
    const DistLawData z = deither(0, maybe());
    // With A empty the law only moves the Right tag past maybe.
    CHECK(graydist::apply(z.law, Tree{0, {Tree{0, {}}}}) == Tree{0, {}});
    CHECK(graydist::apply(z.law, Tree{0, {Tree{1, {Tree{3, {}}}}}}) == Tree{1, {Tree{0, {Tree{3, {}}}}}});
    CHECK(check_dist_law(z).pass());
    CHECK(check_dist_law(deither(1, reader(2))).pass());
  }

  TEST_CASE("builtin parameters give lawful laws") {
    CheckOptions o;
    o.oracle = false;
    for (const auto& t : {maybe(), either(2), reader(2), state(2), writer(cyclic_monoid(2)), identity_monad()}) {
      for (const auto& m : {cyclic_monoid(2), cyclic_monoid(3), boolean_and()}) CHECK(check_dist_law(dwriter(m, t), o).pass());
      for (std::uint32_t a : {0u, 1u, 2u}) CHECK(check_dist_law(deither(a, t), o).pass());
    }
  }

  TEST_CASE("writer modules") {
    const MonoidTable z2 = cyclic_monoid(2);
    const WriterModule free2 = free_writer_module(z2, 2);
    CHECK(free2.carrier == 4);
    CHECK(writer_module_lawful(z2, free2));
    CHECK_THROWS_AS(make_writer_module(z2, 2, {0, 1, 0, 0}), InvalidModule);
    CHECK(make_writer_module(z2, 1, {0, 0}).carrier == 1);
    const auto samples = default_writer_samples(z2);
    for (const auto& s : samples) CHECK(writer_module_lawful(z2, s));
    CHECK(lift_writer_modules(z2, maybe(), {free2}).pass());
    CHECK(lift_writer_modules(z2, maybe(), {make_writer_module(z2, 1, {0, 0})}).pass());
    for (const auto& t : {maybe(), reader(2), writer(cyclic_monoid(3))}) {
      const CheckReport r = lift_writer_modules(z2, t, samples);
      INFO(r.summary());
      CHECK(r.pass());
      CHECK(r.find("lift.law-coherence"));
    }
  }

  TEST_CASE("coslice lifts") {
    for (std::uint32_t a : {1u, 2u}) {
      const auto objs = default_coslice_samples(a);
      const auto mors = coslice_morphisms(objs);
      for (const auto& m : mors) {
        std::vector<std::uint64_t> composite;
        for (auto v : objs[m.from].point) composite.push_back(m.map[v]);
        CHECK(composite == objs[m.to].point);
      }
      for (const auto& t : {maybe(), writer(cyclic_monoid(2)), reader(2), state(2)}) {
        CHECK(lift_coslice(a, t.functor, t.unit, t.mult, objs, mors).pass());
        CHECK(either_lift_law_coherence(a, t).pass);
      }
      CHECK(lift_coslice(a, Container{}, identity(Container{}), std::nullopt, objs, mors).pass());
      std::vector<CosliceMorphism> bad = mors;
      for (auto& m : bad)
        if (objs[m.to].carrier == 2 && objs[m.from].carrier == 2) {
          for (auto& v : m.map) v = 1 - v;
          CHECK_THROWS_AS(lift_coslice(a, maybe().functor, maybe().unit, std::nullopt, objs, bad), InvalidModule);
          break;
        }
    }
  }

  TEST_CASE("functoriality of the parametric constructions") {
    const MonadData mb = maybe(), e2 = either(2), i = identity_monad();
    const MonadMorphismData unit_m{Container{}, mb.unit};  // maybe -> identity
    for (const ParamKind& k : {ParamKind::writer(cyclic_monoid(2)), ParamKind::either(1)}) {
      INFO(k.name());
      CHECK(check_parametric_functoriality(k, mb, mb, identity_monad_morphism(mb)).pass());
      CHECK(check_parametric_functoriality(k, mb, i, unit_m).pass());
      const MonadMorphismData exc{Container{}, maybe_to_either2()};  // either(2) -> maybe
      CHECK(check_monad_morphism(e2, mb, exc).pass());
      CHECK(check_parametric_functoriality(k, e2, mb, exc).pass());
      CHECK(check_parametric_composition(k, exc, unit_m).pass());
    }
  }

  TEST_CASE("cocartesian monoids") {
    for (std::uint32_t a = 1; a <= 3; ++a) {
      const CocartesianMonoid c = unique_cocartesian_monoid(a);
      CHECK(c.unique);
      CHECK(c.lawful == 1);
      CHECK(c.is_codiagonal);
    }
    CHECK(unique_cocartesian_monoid(1).candidates == 1);
    CHECK(unique_cocartesian_monoid(2).candidates == 16);
    CHECK_THROWS(unique_cocartesian_monoid(4));
  }

  TEST_CASE("modules over A and coslice objects") {
    for (std::uint32_t a : {1u, 2u}) {
      const CheckReport r = modules_coslice_iso(a, 2);
      INFO(r.summary());
      CHECK(r.pass());
    }
    CHECK(modules_coslice_iso(1, 1).pass());
    CHECK(modules_coslice_iso(2, 3).pass());
  }
}
