#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graydist/container.hpp"
#include "graydist/report.hpp"

namespace graydist {

class InvalidParameter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MonoidTable {
  std::string name;
  std::uint32_t size = 0;
  std::uint32_t unit = 0;
  std::vector<std::vector<std::uint32_t>> mult;

  // Validates unit laws and associativity.
  static MonoidTable make(std::string name, std::uint32_t size, std::uint32_t unit,
                          std::vector<std::vector<std::uint32_t>> mult);
  // Shape checks only; used for deliberately broken tables.
  static MonoidTable unchecked(std::string name, std::uint32_t size, std::uint32_t unit,
                               std::vector<std::vector<std::uint32_t>> mult);
  bool lawful() const;
  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const { return mult[a][b]; }
};

MonoidTable cyclic_monoid(std::uint32_t n);  // Z_n under addition
MonoidTable boolean_and();

struct MonadData {
  std::string name;
  Container functor;
  Morphism unit;  // Id -> T
  Morphism mult;  // T.T -> T
};

// Checks boundaries of unit and multiplication.
void validate_monad(const MonadData& m);

MonadData writer(const MonoidTable& m);
MonadData either(std::uint32_t a);
MonadData maybe();
MonadData reader(std::uint32_t r);
MonadData state(std::uint32_t s);
MonadData identity_monad();

// Atoms of the builtin functors. Writer atoms depend only on the carrier size.
AtomPtr writer_atom(std::uint32_t m);
AtomPtr either_atom(std::uint32_t a);
AtomPtr reader_atom(std::uint32_t r);
AtomPtr state_atom(std::uint32_t s);

// Index of the function f: S -> S among state shapes (f(0) most significant).
std::uint32_t state_shape_index(const std::vector<std::uint32_t>& f, std::uint32_t s);
std::vector<std::uint32_t> state_shape_function(std::uint32_t index, std::uint32_t s);

struct CheckOptions {
  std::uint32_t max_set_size = 3;
  bool oracle = true;
  std::uint64_t oracle_cap = 4000000;
};

// Compares two parallel morphisms by container equality and cross-checks the
// verdict against the pointwise oracle on sets of size 0..max_set_size.
CheckInstance equality_instance(const std::string& tag, const Morphism& lhs, const Morphism& rhs,
                                const CheckOptions& opt = {});

CheckReport check_monad(const MonadData& m, const CheckOptions& opt = {});

// Tensorial strength str_{A,B}: A x F(B) -> F(A x B). Elements of A x F(B)
// are a * |F(B)| + e, pairs (a, b) are a * |B| + b.
std::vector<std::uint64_t> strength(const Container& f, std::uint64_t a, std::uint64_t b);
// Enrichment [A,B] -> [F A, F B] from a strength: F(ev) o str_{[A,B],A}(h, -).
std::vector<std::uint64_t> enrichment_from_strength(const Container& f, const std::vector<std::uint64_t>& h,
                                                    std::uint64_t a, std::uint64_t b);
// Strength from the enrichment given by the functor action: F(pair_a)(e).
std::vector<std::uint64_t> strength_from_enrichment(const Container& f, std::uint64_t a, std::uint64_t b);
CheckReport strength_enrichment_roundtrip(const Container& f, std::uint32_t max_size = 3);

}  // namespace graydist
