#include "switchscan/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace switchscan {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("SWITCHSCAN_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw DomainError("SWITCHSCAN_BUDGET must be a positive integer");
    b.max_elements = v;
    b.max_bitmap_bits = v;
  }
  return b;
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1 || n > kMaxDegree) throw DomainError("permutation degree must be in 1..63");
  Mask seen = 0;
  for (auto x : images_) {
    if (x >= n || (seen & bit(x))) throw DomainError("permutation images are not a bijection");
    seen |= bit(x);
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1 || n > kMaxDegree) throw DomainError("permutation degree must be in 1..63");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int from = cyc[i];
      const int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= n || to < 0 || to >= n) throw DomainError("cycle point out of range");
      img[static_cast<std::size_t>(from)] = to;
    }
  }
  return from_images(img);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  std::vector<std::uint8_t> img;
  img.reserve(images.size());
  for (int x : images) {
    if (x < 0 || x > 255) throw DomainError("permutation image out of range");
    img.push_back(static_cast<std::uint8_t>(x));
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  Permutation r = *this;
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Mask Permutation::apply(Mask set) const {
  Mask out = 0;
  while (set) {
    const int i = std::countr_zero(set);
    set &= set - 1;
    out |= bit(images_[static_cast<std::size_t>(i)]);
  }
  return out;
}

int Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<int>(i);
  return -1;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DomainError("compose: degree mismatch");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(q(p(i)));
  return Permutation(std::move(img));
}

CycleStats cycle_stats(const Permutation& p) {
  CycleStats s;
  Mask seen = 0;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen & bit(i)) continue;
    int len = 0;
    for (int j = i; !(seen & bit(j)); j = p(j)) {
      seen |= bit(j);
      ++len;
    }
    s.cycle_lengths.push_back(len);
    ++s.orb;
    if (len == 1) ++s.fix;
  }
  std::sort(s.cycle_lengths.begin(), s.cycle_lengths.end());
  return s;
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t l = 1;
  for (int len : cycle_stats(p).cycle_lengths) l = std::lcm(l, static_cast<std::uint64_t>(len));
  return l;
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream out;
  Mask seen = 0;
  bool any = false;
  for (int i = 0; i < p.degree(); ++i) {
    if ((seen & bit(i)) || p(i) == i) continue;
    any = true;
    out << '(';
    for (int j = i; !(seen & bit(j)); j = p(j)) {
      seen |= bit(j);
      if (j != i) out << ',';
      out << j + 1;
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

std::uint32_t apply_to_triple(const Permutation& p, std::uint32_t rank) {
  const auto t = unrank_triple(rank);
  return rank_triple(p(t[0]), p(t[1]), p(t[2]));
}

// ---------------------------------------------------------- StabilizerChain

// Knuth's variant of Schreier-Sims over the full base 0..n-1.
// transversal[k*n + j] holds an element fixing 0..k-1 and sending k to j.
struct StabilizerChain {
  int n = 0;
  std::vector<std::optional<Permutation>> transversal;
  std::vector<std::optional<Permutation>> inverse;
  std::vector<std::vector<Permutation>> strong;
  BigInt order = 1;

  explicit StabilizerChain(int degree) : n(degree) {
    const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    transversal.resize(cells);
    inverse.resize(cells);
    strong.resize(static_cast<std::size_t>(n));
    const auto id = Permutation::identity(n);
    for (int k = 0; k < n; ++k) {
      slot(k, k) = id;
      inv_slot(k, k) = id;
    }
  }

  std::optional<Permutation>& slot(int k, int j) {
    return transversal[static_cast<std::size_t>(k * n + j)];
  }
  std::optional<Permutation>& inv_slot(int k, int j) {
    return inverse[static_cast<std::size_t>(k * n + j)];
  }
  const std::optional<Permutation>& slot(int k, int j) const {
    return transversal[static_cast<std::size_t>(k * n + j)];
  }
  const std::optional<Permutation>& inv_slot(int k, int j) const {
    return inverse[static_cast<std::size_t>(k * n + j)];
  }

  bool member_from(int k, Permutation g) const {
    for (int i = k; i < n; ++i) {
      const int j = g(i);
      if (!slot(i, j)) return false;
      if (j != i) g = compose(g, *inv_slot(i, j));
    }
    return true;
  }

  void add(int k, const Permutation& g) {
    if (k >= n || member_from(k, g)) return;
    strong[static_cast<std::size_t>(k)].push_back(g);
    std::vector<int> orbit;
    for (int j = 0; j < n; ++j)
      if (slot(k, j)) orbit.push_back(j);
    for (int j : orbit) extend(k, compose(*slot(k, j), g));
  }

  void extend(int k, const Permutation& tau) {
    const int j = tau(k);
    if (!slot(k, j)) {
      slot(k, j) = tau;
      inv_slot(k, j) = tau.inverse();
      for (std::size_t s = 0; s < strong[static_cast<std::size_t>(k)].size(); ++s) {
        const Permutation next = compose(tau, strong[static_cast<std::size_t>(k)][s]);
        extend(k, next);
      }
    } else {
      add(k + 1, compose(tau, *inv_slot(k, j)));
    }
  }

  std::size_t orbit_size(int k) const {
    std::size_t c = 0;
    for (int j = 0; j < n; ++j)
      if (slot(k, j)) ++c;
    return c;
  }

  void finish() {
    order = 1;
    for (int k = 0; k < n; ++k) order *= orbit_size(k);
  }
};

// ----------------------------------------------------------------- PermGroup

PermGroup::PermGroup(int degree, std::vector<Permutation> gens) : degree_(degree), gens_(std::move(gens)) {
  if (degree < 1 || degree > kMaxDegree) throw DomainError("group degree must be in 1..63");
  for (const auto& g : gens_)
    if (g.degree() != degree) throw DomainError("generator degree does not match group degree");
  auto chain = std::make_shared<StabilizerChain>(degree);
  for (const auto& g : gens_) chain->add(0, g);
  chain->finish();
  chain_ = std::move(chain);
}

PermGroup PermGroup::from_generators(std::vector<Permutation> gens) {
  if (gens.empty()) throw DomainError("group needs at least one generator");
  const int n = gens.front().degree();
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::symmetric(int n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<int> cyc(static_cast<std::size_t>(n));
    std::iota(cyc.begin(), cyc.end(), 0);
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    if (n >= 3) gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermGroup(n, std::move(gens));
}

const BigInt& PermGroup::order() const { return chain_->order; }

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return chain_->member_from(0, p);
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (int k = 0; k < degree_; ++k)
    if (chain_->orbit_size(k) > 1) b.push_back(k);
  return b;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> s;
  for (int k : base()) s.push_back(chain_->orbit_size(k));
  return s;
}

std::uint64_t PermGroup::order_u64() const {
  if (order() > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw BudgetExceeded("group order does not fit in 64 bits");
  return order().convert_to<std::uint64_t>();
}

Mask PermGroup::orbit_of_point(int point) const {
  Mask orbit = bit(point);
  std::vector<int> stack{point};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto& g : gens_) {
      const int y = g(x);
      if (!(orbit & bit(y))) {
        orbit |= bit(y);
        stack.push_back(y);
      }
    }
  }
  return orbit;
}

std::vector<Mask> PermGroup::orbit_of_set(Mask seed) const {
  std::set<Mask> seen{seed};
  std::vector<Mask> stack{seed};
  while (!stack.empty()) {
    const Mask x = stack.back();
    stack.pop_back();
    for (const auto& g : gens_) {
      const Mask y = g.apply(x);
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Mask> PermGroup::point_orbits() const {
  std::vector<Mask> out;
  Mask covered = 0;
  for (int i = 0; i < degree_; ++i) {
    if (covered & bit(i)) continue;
    const Mask o = orbit_of_point(i);
    covered |= o;
    out.push_back(o);
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbit_of_point(0) == low_mask(degree_); }

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

}  // namespace

PrimitivityReport PermGroup::primitivity() const {
  PrimitivityReport r;
  r.transitive = is_transitive();
  if (!r.transitive) return r;
  if (degree_ <= 2) {
    r.primitive = true;
    return r;
  }
  // Minimal block containing {0, b}: close the pair relation under the generators.
  for (int b = 1; b < degree_; ++b) {
    UnionFind uf(degree_);
    std::deque<std::pair<int, int>> queue;
    uf.unite(0, b);
    queue.emplace_back(0, b);
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      for (const auto& g : gens_) {
        const int gx = g(x), gy = g(y);
        if (uf.unite(gx, gy)) queue.emplace_back(gx, gy);
      }
    }
    std::vector<int> block;
    for (int i = 0; i < degree_; ++i)
      if (uf.find(i) == uf.find(0)) block.push_back(i);
    if (static_cast<int>(block.size()) < degree_) {
      r.block = std::move(block);
      return r;
    }
  }
  r.primitive = true;
  return r;
}

TripleOrbits PermGroup::orbits_on_triples() const {
  TripleOrbits out;
  out.n = degree_;
  const std::uint32_t total = triple_count(degree_);
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  out.orbit_of.assign(total, kUnset);
  for (std::uint32_t r = 0; r < total; ++r) {
    if (out.orbit_of[r] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.orbits.size());
    std::vector<std::uint32_t> members{r};
    out.orbit_of[r] = id;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (const auto& g : gens_) {
        const std::uint32_t img = apply_to_triple(g, members[i]);
        if (out.orbit_of[img] == kUnset) {
          out.orbit_of[img] = id;
          members.push_back(img);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.orbits.push_back(std::move(members));
  }
  return out;
}

ElementCursor PermGroup::elements(std::uint64_t max_elements) const {
  if (order() > BigInt(max_elements))
    throw BudgetExceeded("group order " + order().str() + " exceeds element budget " +
                         std::to_string(max_elements));
  return ElementCursor(*this);
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& fn,
                                 std::uint64_t max_elements) const {
  auto cursor = elements(max_elements);
  while (auto g = cursor.next()) fn(*g);
}

// ------------------------------------------------------------- ElementCursor

ElementCursor::ElementCursor(const PermGroup& g) : chain_(g.chain_), degree_(g.degree()) {
  for (int k = 0; k < degree_; ++k) {
    if (chain_->orbit_size(k) <= 1) continue;
    levels_.push_back(static_cast<std::size_t>(k));
    // identity (point k) first, then the rest of the basic orbit ascending
    std::vector<const Permutation*> reps{&*chain_->slot(k, k)};
    for (int p = 0; p < degree_; ++p)
      if (p != k && chain_->slot(k, p)) reps.push_back(&*chain_->slot(k, p));
    reps_.push_back(std::move(reps));
  }
  digits_.assign(levels_.size(), 0);
  partial_.assign(levels_.size() + 1, Permutation::identity(degree_));
}

// Element = t[last] * ... * t[0] (left to right); level 0 varies fastest.
void ElementCursor::rebuild_from(std::size_t i) {
  for (std::size_t l = i + 1; l-- > 0;) partial_[l] = compose(partial_[l + 1], *reps_[l][digits_[l]]);
}

std::optional<Permutation> ElementCursor::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (levels_.empty()) done_ = true;
    return Permutation::identity(degree_);
  }
  std::size_t i = 0;
  while (i < levels_.size()) {
    if (++digits_[i] < reps_[i].size()) break;
    digits_[i] = 0;
    ++i;
  }
  if (i == levels_.size()) {
    done_ = true;
    return std::nullopt;
  }
  rebuild_from(i);
  return partial_[0];
}

}  // namespace switchscan
