#pragma once

#include <string>

#include "graydist/laws.hpp"
#include "graydist/twocat.hpp"

namespace graydist {

Presentation terminal_presentation();
// One object *, t : * -> *, eta : Id => t, mu : t.t => t and the relations
// monad.unit-left, monad.unit-right, monad.assoc.
Presentation walking_monad();

// Lax Gray tensor of single-object presentations. Generators of factor k are
// renamed base+k once there are two or more factors; the crossing of 1-cells
// f, g is "gamma(f,g)" : f.g => g.f. Relations: lifted relations of both
// factors, naturality of crossings in generating 2-cells (and identities), and
// Yang-Baxter instances for each crossing of the left factor against each
// 1-generator of the right factor.
Presentation gray_tensor(const Presentation& p, const Presentation& q);
Presentation mnd_power(const Presentation& p, int n);

std::string factor_name(const std::string& base, int k, int total);
std::string crossing_name(const std::string& f, const std::string& g);
std::size_t count_relations_with_prefix(const Presentation& p, const std::string& prefix);

// Crossing of arbitrary words by the ladder decomposition; every generator of
// f_word must lie in an earlier factor than every generator of g_word.
TermPtr crossing_term(const Presentation& p, const Word& f_word, const Word& g_word);
Morphism extend_crossing(const Interpretation& in, const Presentation& p, const Word& f_word, const Word& g_word);

// Monad k of the system interprets Gray factor k and law (i,j) the crossing
// gamma(t_i, t_j) : t_i.t_j => t_j.t_i.
Interpretation encode_pdist(const NFoldSystem& s);
NFoldSystem decode_pdist(const Interpretation& in, int n);
bool same_interpretation(const Interpretation& a, const Interpretation& b);

Interpretation monad_interpretation(const MonadData& m);

}  // namespace graydist
