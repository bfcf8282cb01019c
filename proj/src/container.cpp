#include "graydist/container.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace graydist {

// ---------------------------------------------------------------------------
// arithmetic

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a == kSaturated || b == kSaturated) return kSaturated;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  if (a == kSaturated || b == kSaturated || a > kSaturated - b) return kSaturated;
  return a + b;
}

std::uint64_t sat_pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    r = sat_mul(r, a);
    if (r == kSaturated || r == 0) return r;
  }
  return r;
}

// ---------------------------------------------------------------------------
// atoms and containers

AtomPtr make_atom(std::string name, std::vector<std::uint32_t> arity) {
  return std::make_shared<const Atom>(Atom{std::move(name), std::move(arity)});
}

Container::Container(std::vector<AtomPtr> word) : word_(std::move(word)) {
  if (word_.size() > kMaxDepth - 1) throw ContainerError("container word too long");
  for (auto& a : word_)
    if (!a) throw ContainerError("null atom in container word");
}

Container Container::slice(std::size_t from, std::size_t to) const {
  return Container(std::vector<AtomPtr>(word_.begin() + from, word_.begin() + to));
}

std::uint64_t Container::size_on(std::uint64_t x) const {
  std::uint64_t n = x;
  for (std::size_t d = word_.size(); d-- > 0;) {
    std::uint64_t total = 0;
    for (auto ar : word_[d]->arity) total = sat_add(total, sat_pow(n, ar));
    n = total;
  }
  return n;
}

std::string Container::name() const {
  if (word_.empty()) return "Id";
  std::string s;
  for (std::size_t i = 0; i < word_.size(); ++i) s += (i ? "." : "") + word_[i]->name;
  return s;
}

bool operator==(const Container& a, const Container& b) {
  if (a.word_.size() != b.word_.size()) return false;
  for (std::size_t i = 0; i < a.word_.size(); ++i)
    if (a.word_[i] != b.word_[i] && !(*a.word_[i] == *b.word_[i])) return false;
  return true;
}

Container compose_containers(const Container& f, const Container& g) {
  std::vector<AtomPtr> w = f.word();
  w.insert(w.end(), g.word().begin(), g.word().end());
  return Container(std::move(w));
}

Container operator*(const Container& f, const Container& g) { return compose_containers(f, g); }

// ---------------------------------------------------------------------------
// paths

void Path::push(std::uint32_t i) {
  if (len >= kMaxDepth) throw ContainerError("path too deep");
  idx[len++] = static_cast<std::uint16_t>(i);
}

Path Path::prefix(std::size_t n) const {
  Path p;
  p.len = static_cast<std::uint8_t>(n);
  std::copy_n(idx.begin(), n, p.idx.begin());
  return p;
}

Path Path::suffix(std::size_t from) const {
  Path p;
  for (std::size_t i = from; i < len; ++i) p.idx[p.len++] = idx[i];
  return p;
}

Path Path::concat(const Path& tail) const {
  Path p = *this;
  for (std::size_t i = 0; i < tail.len; ++i) p.push(tail.idx[i]);
  return p;
}

bool Path::has_prefix(const Path& p) const {
  if (p.len > len) return false;
  return std::equal(p.idx.begin(), p.idx.begin() + p.len, idx.begin());
}

bool operator==(const Path& a, const Path& b) {
  return a.len == b.len && std::equal(a.idx.begin(), a.idx.begin() + a.len, b.idx.begin());
}

bool operator<(const Path& a, const Path& b) {
  return std::lexicographical_compare(a.idx.begin(), a.idx.begin() + a.len, b.idx.begin(), b.idx.begin() + b.len);
}

std::size_t PathHash::operator()(const Path& p) const {
  std::size_t h = p.len * 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < p.len; ++i) h = (h ^ p.idx[i]) * 0x100000001b3ull + 0x7f4a7c15;
  return h;
}

// ---------------------------------------------------------------------------
// trees

TreeCodec::TreeCodec(const Container& f, std::uint64_t z) : f_(f), z_(z) {
  const std::size_t k = f.length();
  suffix_.assign(k + 1, 0);
  offset_.resize(k);
  suffix_[k] = z;
  for (std::size_t d = k; d-- > 0;) {
    const Atom& a = f.layer(d);
    offset_[d].resize(a.shapes());
    std::uint64_t total = 0;
    for (std::uint32_t s = 0; s < a.shapes(); ++s) {
      offset_[d][s] = total;
      total = sat_add(total, sat_pow(suffix_[d + 1], a.arity[s]));
    }
    suffix_[d] = total;
  }
}

Tree TreeCodec::decode(std::uint64_t index) const {
  if (saturated()) throw ContainerError("tree codec saturated");
  if (index >= size()) throw ContainerError("tree index out of range");
  Tree t;
  decode_at(0, index, t);
  return t;
}

void TreeCodec::decode_at(std::size_t d, std::uint64_t index, Tree& out) const {
  if (d == f_.length()) {
    out.value = static_cast<std::uint32_t>(index);
    return;
  }
  const Atom& a = f_.layer(d);
  std::uint32_t s = static_cast<std::uint32_t>(std::upper_bound(offset_[d].begin(), offset_[d].end(), index) -
                                               offset_[d].begin()) -
                    1;
  out.value = s;
  std::uint64_t rest = index - offset_[d][s];
  const std::uint64_t base = suffix_[d + 1];
  out.kids.resize(a.arity[s]);
  for (std::size_t p = a.arity[s]; p-- > 0;) {
    decode_at(d + 1, rest % base, out.kids[p]);
    rest /= base;
  }
}

std::uint64_t TreeCodec::encode(const Tree& t) const {
  if (saturated()) throw ContainerError("tree codec saturated");
  return encode_at(0, t);
}

std::uint64_t TreeCodec::encode_at(std::size_t d, const Tree& t) const {
  if (d == f_.length()) {
    if (t.value >= z_) throw ContainerError("leaf label out of range");
    return t.value;
  }
  const Atom& a = f_.layer(d);
  if (t.value >= a.shapes() || t.kids.size() != a.arity[t.value]) throw ContainerError("malformed tree");
  std::uint64_t acc = 0;
  for (const Tree& k : t.kids) acc = acc * suffix_[d + 1] + encode_at(d + 1, k);
  return offset_[d][t.value] + acc;
}

namespace {
void collect_leaves(const Tree& t, std::size_t depth, std::vector<std::uint32_t>& out) {
  if (depth == 0) {
    out.push_back(t.value);
    return;
  }
  for (const Tree& k : t.kids) collect_leaves(k, depth - 1, out);
}

void relabel(Tree& t, std::size_t depth, std::uint32_t& next) {
  if (depth == 0) {
    t.value = next++;
    return;
  }
  for (Tree& k : t.kids) relabel(k, depth - 1, next);
}

void collect_shapes(const Tree& t, std::size_t depth, std::vector<std::uint32_t>& out) {
  if (depth == 0) return;
  out.push_back(t.value);
  for (const Tree& k : t.kids) collect_shapes(k, depth - 1, out);
}

bool valid_at(const Container& f, std::size_t d, const Tree& t, std::uint64_t z) {
  if (d == f.length()) return t.kids.empty() && t.value < z;
  const Atom& a = f.layer(d);
  if (t.value >= a.shapes() || t.kids.size() != a.arity[t.value]) return false;
  for (const Tree& k : t.kids)
    if (!valid_at(f, d + 1, k, z)) return false;
  return true;
}
}  // namespace

std::vector<std::uint32_t> leaf_labels(const Tree& t, std::size_t depth) {
  std::vector<std::uint32_t> out;
  collect_leaves(t, depth, out);
  return out;
}

void relabel_leaves_by_ordinal(Tree& t, std::size_t depth) {
  std::uint32_t next = 0;
  relabel(t, depth, next);
}

std::vector<std::uint32_t> preorder_shapes(const Tree& t, std::size_t depth) {
  std::vector<std::uint32_t> out;
  collect_shapes(t, depth, out);
  return out;
}

std::size_t leaf_count(const Tree& t, std::size_t depth) {
  if (depth == 0) return 1;
  std::size_t n = 0;
  for (const Tree& k : t.kids) n += leaf_count(k, depth - 1);
  return n;
}

Tree generic_tree(const Container& f, std::uint64_t shape) {
  Tree t = TreeCodec(f, 1).decode(shape);
  relabel_leaves_by_ordinal(t, f.length());
  return t;
}

bool tree_valid(const Container& f, const Tree& t, std::uint64_t z) { return valid_at(f, 0, t, z); }

std::string render_shapes(const std::vector<std::uint32_t>& nodes) {
  std::string s = "(";
  for (std::size_t i = 0; i < nodes.size(); ++i) s += (i ? "," : "") + std::to_string(nodes[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// morphism expressions

namespace {
struct Val {
  bool leaf = false;
  std::uint32_t shape = 0;
  Path src;
  friend bool operator==(const Val& a, const Val& b) {
    return a.leaf == b.leaf && (a.leaf ? a.src == b.src : a.shape == b.shape);
  }
};
constexpr std::uint32_t kAbsent = ~std::uint32_t{0};
// Read of a node the caller has not assigned yet; propagates to the top.
constexpr std::uint32_t kPending = kAbsent - 1;
bool pending(const Val& v) { return !v.leaf && v.shape == kPending; }

struct DTNode {
  bool built = false;
  bool final = false;
  Val val;
  Path read;
  std::unordered_map<std::uint32_t, std::unique_ptr<DTNode>> next;
};
}  // namespace

struct TableCache {
  MorphismTable data;
  TreeCodec src_codec;
  std::vector<Tree> templates;  // target tree per source shape, leaves = source leaf ordinals

  std::once_flag lazy_once;
  std::vector<std::vector<std::pair<Path, std::uint32_t>>> src_nodes;
  std::vector<std::vector<Path>> src_leaves;
  std::mutex mu;
  std::unordered_map<Path, std::unique_ptr<DTNode>, PathHash> roots;

  explicit TableCache(MorphismTable t) : data(std::move(t)), src_codec(data.src, 1) {}
};

namespace {
void fill_template(Tree& t, std::size_t depth, const std::vector<std::uint32_t>& pos, std::uint32_t& next) {
  if (depth == 0) {
    t.value = pos[next++];
    return;
  }
  for (Tree& k : t.kids) fill_template(k, depth - 1, pos, next);
}

void list_nodes(const Tree& t, std::size_t depth, Path& at, std::vector<std::pair<Path, std::uint32_t>>& nodes,
                std::vector<Path>& leaves) {
  if (depth == 0) {
    leaves.push_back(at);
    return;
  }
  nodes.emplace_back(at, t.value);
  for (std::uint32_t i = 0; i < t.kids.size(); ++i) {
    at.push(i);
    list_nodes(t.kids[i], depth - 1, at, nodes, leaves);
    at.pop();
  }
}

void prepare_lazy(TableCache& c) {
  std::call_once(c.lazy_once, [&c] {
    const std::size_t n = c.data.shape_map.size();
    c.src_nodes.resize(n);
    c.src_leaves.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
      Tree t = c.src_codec.decode(s);
      Path at;
      list_nodes(t, c.data.src.length(), at, c.src_nodes[s], c.src_leaves[s]);
    }
  });
}
}  // namespace

Morphism make_table(MorphismTable t, std::string label) {
  const std::uint64_t ns = t.src.shape_count(), nt = t.tgt.shape_count();
  if (ns > kTableLimit || nt == kSaturated) throw ContainerError("table too large: " + t.src.name());
  if (t.shape_map.size() != ns || t.position_maps.size() != ns) throw ContainerError("table shape count mismatch");
  auto cache = std::make_shared<TableCache>(std::move(t));
  const MorphismTable& d = cache->data;
  TreeCodec tgt_codec(d.tgt, 1);
  cache->templates.resize(ns);
  for (std::uint64_t s = 0; s < ns; ++s) {
    if (d.shape_map[s] >= nt) throw ContainerError("shape map out of range");
    Tree src = cache->src_codec.decode(s);
    const std::size_t src_leaves = leaf_count(src, d.src.length());
    Tree out = tgt_codec.decode(d.shape_map[s]);
    const auto& pos = d.position_maps[s];
    if (pos.size() != leaf_count(out, d.tgt.length())) throw ContainerError("position map size mismatch");
    for (auto p : pos)
      if (p >= src_leaves) throw ContainerError("position map out of range");
    std::uint32_t next = 0;
    fill_template(out, d.tgt.length(), pos, next);
    cache->templates[s] = std::move(out);
  }
  auto node = std::make_shared<MorphNode>();
  node->kind = MorphKind::table;
  node->src = cache->data.src;
  node->tgt = cache->data.tgt;
  node->label = std::move(label);
  node->table = std::move(cache);
  return node;
}

Morphism from_function(const Container& src, const Container& tgt, const std::function<Tree(const Tree&)>& fn,
                       std::string label) {
  const std::uint64_t ns = src.shape_count();
  if (ns > kTableLimit) throw ContainerError("table too large: " + src.name());
  MorphismTable t{src, tgt, {}, {}};
  t.shape_map.resize(ns);
  t.position_maps.resize(ns);
  TreeCodec sc(src, 1), tc(tgt, 1);
  for (std::uint64_t s = 0; s < ns; ++s) {
    Tree in = sc.decode(s);
    const std::size_t nleaves = leaf_count(in, src.length());
    relabel_leaves_by_ordinal(in, src.length());
    Tree out = fn(in);
    if (!tree_valid(tgt, out, nleaves)) throw ContainerError("function output is not a valid tree: " + label);
    t.position_maps[s] = leaf_labels(out, tgt.length());
    Tree bare = out;
    std::uint32_t zero = 0;
    std::vector<std::uint32_t> zeros(t.position_maps[s].size(), 0);
    fill_template(bare, tgt.length(), zeros, zero);
    t.shape_map[s] = tc.encode(bare);
  }
  return make_table(std::move(t), std::move(label));
}

Morphism identity(const Container& f) {
  auto node = std::make_shared<MorphNode>();
  node->kind = MorphKind::identity;
  node->src = f;
  node->tgt = f;
  node->label = "1";
  return node;
}

Morphism vertical(const Morphism& g, const Morphism& f) {
  if (!(f->tgt == g->src))
    throw BoundaryMismatch("vertical composite: " + f->tgt.name() + " vs " + g->src.name());
  if (f->kind == MorphKind::identity) return g;
  if (g->kind == MorphKind::identity) return f;
  auto node = std::make_shared<MorphNode>();
  node->kind = MorphKind::vertical;
  node->src = f->src;
  node->tgt = g->tgt;
  node->outer = g;
  node->inner = f;
  return node;
}

Morphism whisker(const Container& left, const Morphism& g, const Container& right) {
  Morphism cur = g;
  if (g->kind == MorphKind::identity) return identity(left * g->src * right);
  if (!right.is_identity()) {
    auto node = std::make_shared<MorphNode>();
    node->kind = MorphKind::whisker_right;
    node->src = cur->src * right;
    node->tgt = cur->tgt * right;
    node->outer = cur;
    node->side = right;
    cur = node;
  }
  if (!left.is_identity()) {
    auto node = std::make_shared<MorphNode>();
    node->kind = MorphKind::whisker_left;
    node->src = left * cur->src;
    node->tgt = left * cur->tgt;
    node->outer = cur;
    node->side = left;
    cur = node;
  }
  return cur;
}

Morphism horizontal(const Morphism& a, const Morphism& b) {
  return vertical(whisker({}, a, b->tgt), whisker(a->src, b, {}));
}

std::string describe(const Morphism& m) {
  switch (m->kind) {
    case MorphKind::table:
      return m->label;
    case MorphKind::identity:
      return "1[" + m->src.name() + "]";
    case MorphKind::vertical:
      return "(" + describe(m->outer) + " o " + describe(m->inner) + ")";
    case MorphKind::whisker_left:
      return m->side.name() + "." + describe(m->outer);
    case MorphKind::whisker_right:
      return describe(m->outer) + "." + m->side.name();
  }
  return "?";
}

const MorphismTable& table_of(const Morphism& m) {
  if (m->kind != MorphKind::table) throw ContainerError("not a table morphism");
  return m->table->data;
}

// ---------------------------------------------------------------------------
// direct evaluation

namespace {
void substitute(Tree& t, std::size_t depth, const std::vector<std::uint32_t>& labels) {
  if (depth == 0) {
    t.value = labels[t.value];
    return;
  }
  for (Tree& k : t.kids) substitute(k, depth - 1, labels);
}

void apply_below(const Morphism& g, Tree& t, std::size_t depth) {
  if (depth == 0) {
    t = graydist::apply(g, t);
    return;
  }
  for (Tree& k : t.kids) apply_below(g, k, depth - 1);
}

void cut(Tree& t, std::size_t depth, std::vector<Tree>& subs) {
  if (depth == 0) {
    subs.push_back(std::move(t));
    t = Tree{static_cast<std::uint32_t>(subs.size() - 1), {}};
    return;
  }
  for (Tree& k : t.kids) cut(k, depth - 1, subs);
}

void graft(Tree& t, std::size_t depth, const std::vector<Tree>& subs) {
  if (depth == 0) {
    t = subs[t.value];
    return;
  }
  for (Tree& k : t.kids) graft(k, depth - 1, subs);
}
}  // namespace

Tree apply(const Morphism& m, const Tree& in) {
  switch (m->kind) {
    case MorphKind::table: {
      const TableCache& c = *m->table;
      Tree bare = in;
      std::vector<std::uint32_t> labels = leaf_labels(in, c.data.src.length());
      std::vector<std::uint32_t> zeros(labels.size(), 0);
      std::uint32_t next = 0;
      fill_template(bare, c.data.src.length(), zeros, next);
      const std::uint64_t s = c.src_codec.encode(bare);
      Tree out = c.templates[s];
      substitute(out, c.data.tgt.length(), labels);
      return out;
    }
    case MorphKind::identity:
      return in;
    case MorphKind::vertical:
      return graydist::apply(m->outer, graydist::apply(m->inner, in));
    case MorphKind::whisker_left: {
      Tree t = in;
      apply_below(m->outer, t, m->side.length());
      return t;
    }
    case MorphKind::whisker_right: {
      Tree t = in;
      std::vector<Tree> subs;
      cut(t, m->outer->src.length(), subs);
      Tree out = graydist::apply(m->outer, t);
      graft(out, m->outer->tgt.length(), subs);
      return out;
    }
  }
  throw ContainerError("unknown morphism kind");
}

MorphismTable materialize(const Morphism& m) {
  if (m->kind == MorphKind::table) return m->table->data;
  const std::uint64_t ns = m->src.shape_count();
  if (ns > kTableLimit) throw ContainerError("source too large to materialize: " + m->src.name());
  MorphismTable t{m->src, m->tgt, std::vector<std::uint64_t>(ns), std::vector<std::vector<std::uint32_t>>(ns)};
  TreeCodec sc(m->src, 1), tc(m->tgt, 1);
  const std::int64_t n = static_cast<std::int64_t>(ns);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t s = 0; s < n; ++s) {
    Tree in = sc.decode(s);
    relabel_leaves_by_ordinal(in, m->src.length());
    Tree out = graydist::apply(m, in);
    t.position_maps[s] = leaf_labels(out, m->tgt.length());
    std::vector<std::uint32_t> zeros(t.position_maps[s].size(), 0);
    std::uint32_t next = 0;
    fill_template(out, m->tgt.length(), zeros, next);
    t.shape_map[s] = tc.encode(out);
  }
  return t;
}

void require_same_boundary(const Morphism& a, const Morphism& b) {
  if (!(a->src == b->src) || !(a->tgt == b->tgt))
    throw BoundaryMismatch("boundaries differ: " + a->src.name() + " -> " + a->tgt.name() + " vs " +
                           b->src.name() + " -> " + b->tgt.name());
}

// ---------------------------------------------------------------------------
// flat kernels

namespace {
Witness witness_for(const Container& src, const TreeCodec& codec, std::uint64_t s) {
  Witness w;
  w.index = s;
  w.nodes = preorder_shapes(codec.decode(s), src.length());
  w.text = "shape #" + std::to_string(s) + " " + render_shapes(w.nodes);
  return w;
}

EqualityResult finish_flat(const Container& src, std::vector<std::uint64_t> bad, std::size_t max_witnesses,
                           std::uint64_t visited, const char* method) {
  EqualityResult r;
  r.method = method;
  r.visited = visited;
  std::sort(bad.begin(), bad.end());
  r.equal = bad.empty();
  TreeCodec codec(src, 1);
  for (std::size_t i = 0; i < bad.size() && i < max_witnesses; ++i) r.witnesses.push_back(witness_for(src, codec, bad[i]));
  return r;
}
}  // namespace

EqualityResult equal_flat_serial(const Morphism& a, const Morphism& b, std::size_t max_witnesses) {
  require_same_boundary(a, b);
  const std::uint64_t ns = a->src.shape_count();
  if (ns == kSaturated) throw ContainerError("source shape count overflows");
  TreeCodec codec(a->src, 1);
  std::vector<std::uint64_t> bad;
  for (std::uint64_t s = 0; s < ns; ++s) {
    Tree in = codec.decode(s);
    relabel_leaves_by_ordinal(in, a->src.length());
    if (!(graydist::apply(a, in) == graydist::apply(b, in))) bad.push_back(s);
  }
  return finish_flat(a->src, std::move(bad), max_witnesses, ns, "flat-serial");
}

EqualityResult equal_flat_parallel(const Morphism& a, const Morphism& b, std::size_t max_witnesses) {
  require_same_boundary(a, b);
  const std::uint64_t ns = a->src.shape_count();
  if (ns == kSaturated) throw ContainerError("source shape count overflows");
  TreeCodec codec(a->src, 1);
  std::vector<std::uint64_t> bad;
  const std::int64_t n = static_cast<std::int64_t>(ns);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t s = 0; s < n; ++s) {
      Tree in = codec.decode(s);
      relabel_leaves_by_ordinal(in, a->src.length());
      if (!(graydist::apply(a, in) == graydist::apply(b, in))) local.push_back(s);
    }
#pragma omp critical
    bad.insert(bad.end(), local.begin(), local.end());
  }
  return finish_flat(a->src, std::move(bad), max_witnesses, ns, "flat-parallel");
}

// ---------------------------------------------------------------------------
// demand-driven engine

namespace {
class Reader {
 public:
  virtual ~Reader() = default;
  virtual std::uint32_t read(const Path& p) = 0;
};

class Session;
Val query(const MorphNode* m, Reader& r, const Path& q, Session& s);

class OffsetReader final : public Reader {
 public:
  OffsetReader(Reader* base, Path prefix) : base_(base), prefix_(prefix) {}
  std::uint32_t read(const Path& p) override { return base_->read(prefix_.concat(p)); }

 private:
  Reader* base_;
  Path prefix_;
};

class MidReader final : public Reader {
 public:
  MidReader(const MorphNode* f, Reader* base, Session* s) : f_(f), base_(base), s_(s) {}
  std::uint32_t read(const Path& p) override;
  void forget(const Path& p) { memo_.erase(p); }

 private:
  const MorphNode* f_;
  Reader* base_;
  Session* s_;
  std::unordered_map<Path, std::uint32_t, PathHash> memo_;
};

class Session {
 public:
  Reader* offset(Reader* base, const Path& prefix) {
    auto key = std::make_pair(base, prefix);
    auto it = offsets_.find(key);
    if (it != offsets_.end()) return it->second.get();
    auto [pos, ok] = offsets_.emplace(key, std::make_unique<OffsetReader>(base, prefix));
    return pos->second.get();
  }
  Reader* mid(const MorphNode* f, Reader* base) {
    auto key = std::make_pair(f, base);
    auto it = mids_.find(key);
    if (it != mids_.end()) return it->second.get();
    auto [pos, ok] = mids_.emplace(key, std::make_unique<MidReader>(f, base, this));
    return pos->second.get();
  }

  // Memo entries are logged so a search can drop those made after a mark.
  void log(MidReader* m, const Path& p) { trail_.emplace_back(m, p); }
  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      trail_.back().first->forget(trail_.back().second);
      trail_.pop_back();
    }
  }

 private:
  std::vector<std::pair<MidReader*, Path>> trail_;
  std::map<std::pair<Reader*, Path>, std::unique_ptr<OffsetReader>> offsets_;
  std::map<std::pair<const MorphNode*, Reader*>, std::unique_ptr<MidReader>> mids_;
};

std::uint32_t MidReader::read(const Path& p) {
  auto it = memo_.find(p);
  if (it != memo_.end()) return it->second;
  std::uint32_t v = query(f_, *base_, p, *s_).shape;
  if (v != kPending) {
    memo_.emplace(p, v);
    s_->log(this, p);
  }
  return v;
}

std::uint32_t node_value(const std::vector<std::pair<Path, std::uint32_t>>& nodes, const Path& p) {
  for (auto& [q, v] : nodes)
    if (q == p) return v;
  return kAbsent;
}

Val template_value(const TableCache& c, std::uint64_t s, const Path& q) {
  const Tree* t = &c.templates[s];
  const std::size_t tl = c.data.tgt.length();
  for (std::size_t d = 0; d < q.len; ++d) {
    if (d >= tl || q.idx[d] >= t->kids.size()) return Val{false, kAbsent, {}};
    t = &t->kids[q.idx[d]];
  }
  if (q.len == tl) return Val{true, 0, c.src_leaves[s][t->value]};
  return Val{false, t->value, {}};
}

// Decide the next source node to read (or the final value) given the reads
// made so far. A frontier node is read only if the output at q varies while
// everything outside its subtree is held fixed.
void build_decision(TableCache& c, const Path& q, const std::vector<std::pair<Path, std::uint32_t>>& assigned,
                    DTNode& node) {
  std::vector<std::uint64_t> cand;
  for (std::uint64_t s = 0; s < c.src_nodes.size(); ++s) {
    bool ok = true;
    for (auto& [p, v] : assigned)
      if (node_value(c.src_nodes[s], p) != v) {
        ok = false;
        break;
      }
    if (ok) cand.push_back(s);
  }
  if (cand.empty()) throw ContainerError("inconsistent reads in table lookup");
  std::vector<Val> outs;
  outs.reserve(cand.size());
  for (auto s : cand) outs.push_back(template_value(c, s, q));
  node.built = true;
  if (std::all_of(outs.begin(), outs.end(), [&](const Val& v) { return v == outs[0]; })) {
    node.final = true;
    node.val = outs[0];
    return;
  }
  auto is_assigned = [&](const Path& p) {
    return std::any_of(assigned.begin(), assigned.end(), [&](auto& a) { return a.first == p; });
  };
  // Readable nodes exist in every candidate, so they exist whatever the
  // unread ancestors hold.
  std::vector<Path> frontier;
  for (auto& [p, v] : c.src_nodes[cand[0]]) {
    if (is_assigned(p)) continue;
    bool everywhere = true;
    for (std::size_t i = 1; i < cand.size() && everywhere; ++i) everywhere = node_value(c.src_nodes[cand[i]], p) != kAbsent;
    if (everywhere) frontier.push_back(p);
  }
  std::stable_sort(frontier.begin(), frontier.end(), [](const Path& x, const Path& y) { return x.len < y.len; });
  for (const Path& v : frontier) {
    // With uniform arity at v only v varies; otherwise its whole subtree does.
    const auto& ar = c.data.src.layer(v.len).arity;
    const bool uniform = std::all_of(ar.begin(), ar.end(), [&](std::uint32_t x) { return x == ar[0]; });
    std::map<std::vector<std::pair<Path, std::uint32_t>>, Val> groups;
    bool relevant = false;
    for (std::size_t i = 0; i < cand.size() && !relevant; ++i) {
      std::vector<std::pair<Path, std::uint32_t>> key;
      for (auto& pv : c.src_nodes[cand[i]])
        if (uniform ? !(pv.first == v) : !pv.first.has_prefix(v)) key.push_back(pv);
      auto [it, fresh] = groups.emplace(std::move(key), outs[i]);
      if (!fresh && !(it->second == outs[i])) relevant = true;
    }
    if (relevant) {
      node.read = v;
      return;
    }
  }
  node.read = frontier.at(0);
}

Val table_query(TableCache& c, Reader& r, const Path& q) {
  prepare_lazy(c);
  DTNode* node;
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto& root = c.roots[q];
    if (!root) root = std::make_unique<DTNode>();
    node = root.get();
  }
  std::vector<std::pair<Path, std::uint32_t>> assigned;
  while (true) {
    {
      std::lock_guard<std::mutex> lock(c.mu);
      if (!node->built) build_decision(c, q, assigned, *node);
      if (node->final) {
        if (!node->val.leaf && node->val.shape == kAbsent) throw ContainerError("query of an absent node");
        return node->val;
      }
    }
    const Path p = node->read;
    const std::uint32_t v = r.read(p);
    if (v == kPending) return Val{false, kPending, {}};
    assigned.emplace_back(p, v);
    std::lock_guard<std::mutex> lock(c.mu);
    auto& nx = node->next[v];
    if (!nx) nx = std::make_unique<DTNode>();
    node = nx.get();
  }
}

Val query(const MorphNode* m, Reader& r, const Path& q, Session& s) {
  switch (m->kind) {
    case MorphKind::table:
      return table_query(*m->table, r, q);
    case MorphKind::identity:
      if (q.len == m->src.length()) return Val{true, 0, q};
      return Val{false, r.read(q), {}};
    case MorphKind::vertical: {
      Reader* mid = s.mid(m->inner.get(), &r);
      Val v = query(m->outer.get(), *mid, q, s);
      if (!v.leaf) return v;  // shapes and pending reads alike
      return query(m->inner.get(), r, v.src, s);
    }
    case MorphKind::whisker_left: {
      const std::size_t k = m->side.length();
      if (q.len < k) return Val{false, r.read(q), {}};
      const Path head = q.prefix(k);
      Val v = query(m->outer.get(), *s.offset(&r, head), q.suffix(k), s);
      if (v.leaf) v.src = head.concat(v.src);
      return v;
    }
    case MorphKind::whisker_right: {
      const std::size_t k = m->outer->tgt.length();
      if (q.len < k) return query(m->outer.get(), r, q, s);
      Val v = query(m->outer.get(), r, q.prefix(k), s);
      if (pending(v)) return v;
      const Path src = v.src.concat(q.suffix(k));
      if (q.len == m->tgt.length()) return Val{true, 0, src};
      return Val{false, r.read(src), {}};
    }
  }
  throw ContainerError("unknown morphism kind");
}

class AssignReader final : public Reader {
 public:
  explicit AssignReader(const std::unordered_map<Path, std::uint32_t, PathHash>& a) : a_(a) {}
  std::uint32_t read(const Path& p) override {
    auto it = a_.find(p);
    if (it == a_.end()) {
      if (!missing) need = p;
      missing = true;
      return kPending;
    }
    return it->second;
  }

  bool missing = false;
  Path need;

 private:
  const std::unordered_map<Path, std::uint32_t, PathHash>& a_;
};

struct Search {
  Search(const MorphNode* x, const MorphNode* y, const Container& s, const Container& t, std::size_t mw)
      : a(x), b(y), src(s), tgt(t), max_witnesses(mw) {}

  const MorphNode* a;
  const MorphNode* b;
  const Container& src;
  const Container& tgt;
  std::size_t max_witnesses;
  std::unordered_map<Path, std::uint32_t, PathHash> assign;
  Session session;
  AssignReader reader{assign};
  std::vector<Witness> witnesses;
  std::uint64_t visited = 0;
  bool stop = false;

  void complete(Tree& t, std::size_t d, Path& at) const {
    if (d == src.length()) return;
    auto it = assign.find(at);
    t.value = it == assign.end() ? 0 : it->second;
    t.kids.resize(src.layer(d).arity[t.value]);
    for (std::uint32_t i = 0; i < t.kids.size(); ++i) {
      at.push(i);
      complete(t.kids[i], d + 1, at);
      at.pop();
    }
  }

  void record(const Path& q) {
    Tree t;
    Path at;
    complete(t, 0, at);
    Witness w;
    w.nodes = preorder_shapes(t, src.length());
    TreeCodec codec(src, 1);
    if (!codec.saturated()) w.index = codec.encode(t);
    std::ostringstream os;
    if (w.index != kSaturated) os << "shape #" << w.index << " ";
    os << render_shapes(w.nodes) << " differs at output node (";
    for (std::size_t i = 0; i < q.len; ++i) os << (i ? "," : "") << q.idx[i];
    os << ")";
    w.text = os.str();
    for (const auto& x : witnesses)
      if (x.nodes == w.nodes) return;
    witnesses.push_back(std::move(w));
    if (witnesses.size() >= max_witnesses) stop = true;
  }

  void explore(const Path& q) {
    if (stop) return;
    Val va, vb;
    AssignReader& r = reader;
    r.missing = false;
    va = query(a, r, q, session);
    if (!r.missing) vb = query(b, r, q, session);
    if (r.missing) {
      const Path need = r.need;
      const std::size_t mark = session.mark();
      const std::uint32_t shapes = src.layer(need.len).shapes();
      for (std::uint32_t v = 0; v < shapes && !stop; ++v) {
        assign[need] = v;
        explore(q);
        session.undo(mark);
      }
      assign.erase(need);
      return;
    }
    ++visited;
    if (!(va == vb)) {
      record(q);
      return;
    }
    if (va.leaf) return;
    const std::uint32_t ar = tgt.layer(q.len).arity[va.shape];
    for (std::uint32_t i = 0; i < ar && !stop; ++i) {
      Path c = q;
      c.push(i);
      explore(c);
    }
  }
};
}  // namespace

EqualityResult equal_lazy(const Morphism& a, const Morphism& b, std::size_t max_witnesses) {
  require_same_boundary(a, b);
  Search search(a.get(), b.get(), a->src, a->tgt, max_witnesses);
  search.explore(Path{});
  EqualityResult r;
  r.method = "lazy";
  r.visited = search.visited;
  r.witnesses = std::move(search.witnesses);
  std::sort(r.witnesses.begin(), r.witnesses.end(), [](const Witness& x, const Witness& y) {
    return x.index != y.index ? x.index < y.index : x.nodes < y.nodes;
  });
  r.equal = r.witnesses.empty();
  return r;
}

EqualityResult compare(const Morphism& a, const Morphism& b, std::size_t max_witnesses) {
  require_same_boundary(a, b);
  if (a->src.shape_count() <= kFlatLimit) return equal_flat_parallel(a, b, max_witnesses);
  return equal_lazy(a, b, max_witnesses);
}

bool morphism_equal(const Morphism& a, const Morphism& b) { return compare(a, b, 1).equal; }

// ---------------------------------------------------------------------------
// pointwise oracle

std::uint64_t eval_on_set(const Container& f, std::uint64_t x) { return f.size_on(x); }

std::vector<std::uint64_t> functor_action(const Container& f, const std::vector<std::uint64_t>& h, std::uint64_t a,
                                          std::uint64_t b) {
  if (h.size() != a) throw ContainerError("function table does not match its domain");
  TreeCodec ca(f, a), cb(f, b);
  if (ca.saturated() || cb.saturated()) throw ContainerError("set too large");
  std::vector<std::uint64_t> out(ca.size());
  for (std::uint64_t e = 0; e < ca.size(); ++e) {
    Tree t = ca.decode(e);
    std::vector<std::uint32_t> lab = leaf_labels(t, f.length());
    std::vector<std::uint32_t> mapped(lab.size());
    for (std::size_t i = 0; i < lab.size(); ++i) mapped[i] = static_cast<std::uint32_t>(h[lab[i]]);
    std::uint32_t next = 0;
    fill_template(t, f.length(), mapped, next);
    out[e] = cb.encode(t);
  }
  return out;
}

std::optional<std::vector<std::uint64_t>> eval_morphism_on_set(const Morphism& m, std::uint64_t x,
                                                               std::uint64_t cap) {
  const std::uint64_t ns = m->src.size_on(x), nt = m->tgt.size_on(x);
  if (ns > cap || nt > cap) return std::nullopt;
  switch (m->kind) {
    case MorphKind::table: {
      const MorphismTable& d = m->table->data;
      TreeCodec cs(d.src, x), ct(d.tgt, x), shapes_src(d.src, 1), shapes_tgt(d.tgt, 1);
      std::vector<std::uint64_t> out(ns);
      for (std::uint64_t e = 0; e < ns; ++e) {
        Tree t = cs.decode(e);
        std::vector<std::uint32_t> lab = leaf_labels(t, d.src.length());
        std::vector<std::uint32_t> zeros(lab.size(), 0);
        std::uint32_t next = 0;
        fill_template(t, d.src.length(), zeros, next);
        const std::uint64_t s = shapes_src.encode(t);
        Tree o = shapes_tgt.decode(d.shape_map[s]);
        std::vector<std::uint32_t> olab;
        for (auto p : d.position_maps[s]) olab.push_back(lab[p]);
        next = 0;
        fill_template(o, d.tgt.length(), olab, next);
        out[e] = ct.encode(o);
      }
      return out;
    }
    case MorphKind::identity: {
      std::vector<std::uint64_t> out(ns);
      std::iota(out.begin(), out.end(), 0);
      return out;
    }
    case MorphKind::vertical: {
      auto f = eval_morphism_on_set(m->inner, x, cap);
      auto g = eval_morphism_on_set(m->outer, x, cap);
      if (!f || !g) return std::nullopt;
      std::vector<std::uint64_t> out(ns);
      for (std::uint64_t e = 0; e < ns; ++e) out[e] = (*g)[(*f)[e]];
      return out;
    }
    case MorphKind::whisker_left: {
      auto h = eval_morphism_on_set(m->outer, x, cap);
      if (!h) return std::nullopt;
      return functor_action(m->side, *h, m->outer->src.size_on(x), m->outer->tgt.size_on(x));
    }
    case MorphKind::whisker_right:
      return eval_morphism_on_set(m->outer, m->side.size_on(x), cap);
  }
  return std::nullopt;
}

void configure_threads_from_env() {
#ifdef _OPENMP
  if (const char* v = std::getenv("GRAYDIST_THREADS")) {
    int n = std::atoi(v);
    if (n > 0) omp_set_num_threads(n);
  }
#endif
}

}  // namespace graydist
