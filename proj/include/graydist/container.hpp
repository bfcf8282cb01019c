#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace graydist {

class ContainerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BoundaryMismatch : public ContainerError {
 public:
  using ContainerError::ContainerError;
};

// Polynomial endofunctor of finite sets with a single layer: a finite set of
// shapes, each with a finite number of positions.
struct Atom {
  std::string name;
  std::vector<std::uint32_t> arity;

  std::uint32_t shapes() const { return static_cast<std::uint32_t>(arity.size()); }
  friend bool operator==(const Atom& a, const Atom& b) { return a.name == b.name && a.arity == b.arity; }
};
using AtomPtr = std::shared_ptr<const Atom>;

AtomPtr make_atom(std::string name, std::vector<std::uint32_t> arity);

inline constexpr std::uint64_t kSaturated = ~std::uint64_t{0};
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_pow(std::uint64_t a, std::uint64_t e);

// A container is a composite of atoms; word()[0] is the outermost layer.
// Composition is concatenation, so it is strictly associative and unital.
class Container {
 public:
  Container() = default;
  explicit Container(std::vector<AtomPtr> word);
  static Container of(AtomPtr a) { return Container({std::move(a)}); }

  const std::vector<AtomPtr>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }
  const Atom& layer(std::size_t d) const { return *word_[d]; }

  Container slice(std::size_t from, std::size_t to) const;
  // |F(X)| for |X| = x, saturating at kSaturated.
  std::uint64_t size_on(std::uint64_t x) const;
  std::uint64_t shape_count() const { return size_on(1); }
  std::string name() const;

  friend bool operator==(const Container& a, const Container& b);

 private:
  std::vector<AtomPtr> word_;
};

// F after G.
Container compose_containers(const Container& f, const Container& g);
Container operator*(const Container& f, const Container& g);

inline constexpr std::size_t kMaxDepth = 16;

// Address of a node in a tree: position indices from the root.
struct Path {
  std::uint8_t len = 0;
  std::array<std::uint16_t, kMaxDepth> idx{};

  void push(std::uint32_t i);
  void pop() { --len; }
  Path prefix(std::size_t n) const;
  Path suffix(std::size_t from) const;
  Path concat(const Path& tail) const;
  bool has_prefix(const Path& p) const;
  friend bool operator==(const Path& a, const Path& b);
  friend bool operator<(const Path& a, const Path& b);
};
struct PathHash {
  std::size_t operator()(const Path& p) const;
};

// A tree over a container word. Internal nodes at depth d carry a shape of
// layer d; leaves (depth == length) carry an arbitrary label.
struct Tree {
  std::uint32_t value = 0;
  std::vector<Tree> kids;
  friend bool operator==(const Tree&, const Tree&) = default;
};

// Canonical lexicographic codec for trees whose leaves carry labels below z.
// The block of shape s starts after all smaller shapes; children are mixed
// radix digits with child 0 most significant. With z = 1 the codec enumerates
// shapes of the composite container.
class TreeCodec {
 public:
  TreeCodec(const Container& f, std::uint64_t z);
  std::uint64_t size() const { return suffix_[0]; }
  bool saturated() const { return suffix_[0] == kSaturated; }
  Tree decode(std::uint64_t index) const;
  std::uint64_t encode(const Tree& t) const;

 private:
  void decode_at(std::size_t d, std::uint64_t index, Tree& out) const;
  std::uint64_t encode_at(std::size_t d, const Tree& t) const;

  Container f_;
  std::uint64_t z_;
  std::vector<std::uint64_t> suffix_;
  std::vector<std::vector<std::uint64_t>> offset_;
};

std::vector<std::uint32_t> leaf_labels(const Tree& t, std::size_t depth);
void relabel_leaves_by_ordinal(Tree& t, std::size_t depth);
std::vector<std::uint32_t> preorder_shapes(const Tree& t, std::size_t depth);
std::size_t leaf_count(const Tree& t, std::size_t depth);
// Generic element of the given shape: leaves labelled 0,1,2,... in preorder.
Tree generic_tree(const Container& f, std::uint64_t shape);
// Structural validity against a container word; leaf labels must be below z.
bool tree_valid(const Container& f, const Tree& t, std::uint64_t z);
std::string render_shapes(const std::vector<std::uint32_t>& nodes);

// Explicit shape/position data: the natural transformation sends a source
// shape s to shape_map[s] and reads the target position p from the source
// position position_maps[s][p].
struct MorphismTable {
  Container src;
  Container tgt;
  std::vector<std::uint64_t> shape_map;
  std::vector<std::vector<std::uint32_t>> position_maps;
};

struct MorphNode;
using Morphism = std::shared_ptr<const MorphNode>;

enum class MorphKind { table, identity, vertical, whisker_left, whisker_right };

struct TableCache;

struct MorphNode {
  MorphKind kind;
  Container src;
  Container tgt;
  std::string label;
  std::shared_ptr<TableCache> table;
  Morphism outer;  // vertical: applied second; whiskers: the whiskered cell
  Morphism inner;  // vertical: applied first
  Container side;  // whisker context
};

// Shape counts above this bound are refused when materializing tables.
inline constexpr std::uint64_t kTableLimit = 1u << 20;

Morphism make_table(MorphismTable t, std::string label);
// Builds a table by running fn on the generic element of every source shape.
Morphism from_function(const Container& src, const Container& tgt, const std::function<Tree(const Tree&)>& fn,
                       std::string label);
Morphism identity(const Container& f);
Morphism vertical(const Morphism& g, const Morphism& f);
Morphism horizontal(const Morphism& a, const Morphism& b);
Morphism whisker(const Container& left, const Morphism& g, const Container& right);
std::string describe(const Morphism& m);

// Direct evaluation on a concrete tree (leaf labels are payloads).
Tree apply(const Morphism& m, const Tree& in);
MorphismTable materialize(const Morphism& m);
const MorphismTable& table_of(const Morphism& m);  // table nodes only

struct Witness {
  std::uint64_t index = kSaturated;  // canonical shape index, if representable
  std::vector<std::uint32_t> nodes;  // preorder shapes of the source tree
  std::string text;
};

struct EqualityResult {
  bool equal = true;
  std::vector<Witness> witnesses;
  std::string method;
  std::uint64_t visited = 0;
};

inline constexpr std::size_t kMaxWitnesses = 32;
inline constexpr std::uint64_t kFlatLimit = 200000;

// Exhaustive comparison over every source shape.
EqualityResult equal_flat_serial(const Morphism& a, const Morphism& b, std::size_t max_witnesses = kMaxWitnesses);
EqualityResult equal_flat_parallel(const Morphism& a, const Morphism& b,
                                   std::size_t max_witnesses = kMaxWitnesses);
// Demand-driven search over partial source shapes; only the nodes an output
// node actually depends on are enumerated.
EqualityResult equal_lazy(const Morphism& a, const Morphism& b, std::size_t max_witnesses = kMaxWitnesses);

EqualityResult compare(const Morphism& a, const Morphism& b, std::size_t max_witnesses = kMaxWitnesses);
bool morphism_equal(const Morphism& a, const Morphism& b);
void require_same_boundary(const Morphism& a, const Morphism& b);

// Pointwise oracle. Elements of F(X) use the TreeCodec numbering with z = |X|.
std::uint64_t eval_on_set(const Container& f, std::uint64_t x);
// F(h) for h: A -> B given as a value table.
std::vector<std::uint64_t> functor_action(const Container& f, const std::vector<std::uint64_t>& h, std::uint64_t a,
                                          std::uint64_t b);
// Component at X computed from the table data, functor actions and function
// composition; nullopt when an intermediate set exceeds cap elements.
std::optional<std::vector<std::uint64_t>> eval_morphism_on_set(const Morphism& m, std::uint64_t x,
                                                               std::uint64_t cap = 4000000);

// Thread cap from GRAYDIST_THREADS (0 or unset = runtime default).
void configure_threads_from_env();

}  // namespace graydist
