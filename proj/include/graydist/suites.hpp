#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graydist/gray.hpp"
#include "graydist/laws.hpp"
#include "graydist/report.hpp"

namespace graydist {

// check_monad on the composite plus "compose.action": on every h : X -> Y with
// |X|, |Y| <= max_set_size the composite acts as T1(T2(h)).
CheckReport composition_suite(const DistLawData& d, const CheckOptions& opt = {});

// Single-entry edits of the materialized law table: one shape entry
// (arity-preserving) or one position entry.
std::vector<Morphism> law_mutations(const Morphism& law);

struct MutationStats {
  std::size_t total = 0;
  std::size_t single_axiom = 0;  // mutants failing exactly one axiom
  std::size_t matched = 0;       // of those, failing exactly the mapped condition
  std::string first_mismatch;
};

MutationStats mnd_mutation_stats(const DistLawData& d, const CheckOptions& opt = {});
// Tags: mnd.roundtrip, mnd.conditions (check_monad_in_mnd agrees with
// check_dist_law), and with mutations, mnd.mutations.
CheckReport mnd_in_mnd_suite(const DistLawData& d, bool mutations, const CheckOptions& opt = {});

// Tags: duality.cardinality, duality.injective, duality.inverse,
// duality.contravariant, duality.identity.
CheckReport duality_suite(int max_size = 5);
// Tags: hat.count, hat.vertical, hat.horizontal, hat.interchange, and
// hat.tilde(name) for each monad.
CheckReport classifier_suite(int max_size, const std::vector<MonadData>& monads);
// Tags: gray.one-gens(n), gray.two-gens(n), gray.yang-baxter(n).
CheckReport gray_counts_suite(int max_n = 4);

}  // namespace graydist
