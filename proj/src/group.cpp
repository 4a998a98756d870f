#include "mbx/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "mbx/error.hpp"

namespace mbx::group {

namespace {

constexpr std::uint32_t kEmpty = 0xffffffffu;

bool lex_less(std::span<const Point> a, std::span<const Point> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Normal closure in `g` of the given elements, as a membership mask.
std::vector<char> normal_closure(const FiniteGroup& g, std::vector<std::uint32_t> seeds) {
  std::vector<char> member(g.order(), 0);
  std::vector<std::uint32_t> elements{0};
  member[0] = 1;
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> group_gens;
  for (const auto& s : g.generators()) group_gens.push_back(*g.find(s));

  std::vector<std::uint32_t> pending = std::move(seeds);
  while (!pending.empty()) {
    std::uint32_t fresh = pending.back();
    pending.pop_back();
    if (member[fresh]) continue;
    gens.push_back(fresh);
    // Re-close the subgroup under the enlarged generating set.
    std::size_t head = 0;
    std::size_t old_size = elements.size();
    for (std::size_t i = 0; i < old_size; ++i) {
      std::uint32_t y = g.multiply(elements[i], fresh);
      if (!member[y]) {
        member[y] = 1;
        elements.push_back(y);
      }
    }
    head = old_size;
    while (head < elements.size()) {
      std::uint32_t x = elements[head++];
      for (std::uint32_t s : gens) {
        std::uint32_t y = g.multiply(x, s);
        if (!member[y]) {
          member[y] = 1;
          elements.push_back(y);
        }
      }
    }
    for (std::uint32_t s : gens) {
      for (std::uint32_t t : group_gens) {
        std::uint32_t c = g.conjugate(s, t);
        if (!member[c]) pending.push_back(c);
      }
    }
  }
  return member;
}

std::vector<std::uint32_t> members(const std::vector<char>& mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

Permutation FiniteGroup::permutation(std::uint32_t i) const {
  auto e = element(i);
  return Permutation(std::vector<Point>(e.begin(), e.end()));
}

std::uint64_t FiniteGroup::hash(std::span<const Point> images) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ images.size();
  for (Point p : images) {
    h ^= p;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return h;
}

std::optional<std::uint32_t> FiniteGroup::find(std::span<const Point> images) const {
  if (images.size() != degree_ || slots_.empty()) return std::nullopt;
  std::uint64_t pos = hash(images) & mask_;
  while (true) {
    std::uint32_t slot = slots_[pos];
    if (slot == kEmpty) return std::nullopt;
    auto e = element(slot);
    if (std::equal(e.begin(), e.end(), images.begin())) return slot;
    pos = (pos + 1) & mask_;
  }
}

void FiniteGroup::insert(std::span<const Point> images) {
  std::uint64_t pos = hash(images) & mask_;
  while (slots_[pos] != kEmpty) pos = (pos + 1) & mask_;
  points_.insert(points_.end(), images.begin(), images.end());
  slots_[pos] = count_++;
}

std::uint32_t FiniteGroup::multiply(std::uint32_t a, std::uint32_t b) const {
  auto x = element(a);
  auto y = element(b);
  Point buf[512];
  std::vector<Point> heap;
  Point* out = buf;
  if (degree_ > 512) {
    heap.resize(degree_);
    out = heap.data();
  }
  for (std::size_t i = 0; i < degree_; ++i) out[i] = y[x[i]];
  auto r = find(std::span<const Point>(out, degree_));
  return *r;
}

std::uint32_t FiniteGroup::power(std::uint32_t x, std::uint64_t e) const {
  std::uint32_t result = 0;
  std::uint32_t base = x;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

std::uint32_t FiniteGroup::element_order(std::uint32_t x) const {
  std::uint32_t order = 1;
  std::uint32_t y = x;
  while (y != 0) {
    y = multiply(y, x);
    ++order;
  }
  return order;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (const auto& c : classes_) e = std::lcm(e, static_cast<std::uint64_t>(c.element_order));
  return e;
}

void FiniteGroup::compute_classes() {
  inverses_.assign(count_, 0);
  {
    std::vector<Point> inv(degree_);
    for (std::uint32_t i = 0; i < count_; ++i) {
      auto e = element(i);
      for (std::size_t j = 0; j < degree_; ++j) inv[e[j]] = static_cast<Point>(j);
      inverses_[i] = *find(inv);
    }
  }
  std::vector<std::uint32_t> gens;
  for (const auto& s : generators_) gens.push_back(*find(s.images()));

  class_of_.assign(count_, kEmpty);
  struct Raw {
    std::uint32_t rep;
    std::uint64_t size;
    std::uint32_t order;
    std::vector<std::uint32_t> members;
  };
  std::vector<Raw> raw;
  for (std::uint32_t start = 0; start < count_; ++start) {
    if (class_of_[start] != kEmpty) continue;
    std::uint32_t id = static_cast<std::uint32_t>(raw.size());
    std::vector<std::uint32_t> orbit{start};
    class_of_[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (std::uint32_t s : gens) {
        std::uint32_t y = conjugate(orbit[head], s);
        if (class_of_[y] == kEmpty) {
          class_of_[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::uint32_t rep = *std::min_element(orbit.begin(), orbit.end(), [&](std::uint32_t a, std::uint32_t b) {
      return lex_less(element(a), element(b));
    });
    raw.push_back({rep, orbit.size(), element_order(rep), std::move(orbit)});
  }
  std::vector<std::uint32_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin() + 1, perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (raw[a].size != raw[b].size) return raw[a].size < raw[b].size;
    if (raw[a].order != raw[b].order) return raw[a].order < raw[b].order;
    return lex_less(element(raw[a].rep), element(raw[b].rep));
  });
  classes_.clear();
  class_reps_.clear();
  for (std::uint32_t pos = 0; pos < perm.size(); ++pos) {
    Raw& r = raw[perm[pos]];
    for (std::uint32_t m : r.members) class_of_[m] = pos;
    classes_.push_back({permutation(r.rep), r.size, count_ / r.size, r.order});
    class_reps_.push_back(r.rep);
  }
}

FiniteGroup build_group(std::vector<Permutation> generators, std::size_t degree, std::size_t cap,
                        std::string name, FamilyInfo family) {
  if (degree == 0) degree = 1;
  if (degree > 0xffff) throw CapExceeded("degree " + std::to_string(degree) + " exceeds 65535 points");
  for (auto& s : generators) {
    if (s.degree() > degree) throw InvalidPermutation("generator acts on more than " + std::to_string(degree) + " points");
    if (s.degree() < degree) s = s.extended(degree);
  }
  FiniteGroup g;
  g.name_ = std::move(name);
  g.family_ = std::move(family);
  g.degree_ = degree;
  g.generators_ = std::move(generators);

  std::size_t slots = 16;
  while (slots < 2 * std::min<std::size_t>(cap + 1, 1u << 22)) slots <<= 1;
  g.slots_.assign(slots, kEmpty);
  g.mask_ = slots - 1;
  auto grow = [&g] {
    std::vector<std::uint32_t> old = std::move(g.slots_);
    g.slots_.assign(old.size() * 2, kEmpty);
    g.mask_ = g.slots_.size() - 1;
    for (std::uint32_t i = 0; i < g.count_; ++i) {
      std::uint64_t pos = g.hash(g.element(i)) & g.mask_;
      while (g.slots_[pos] != kEmpty) pos = (pos + 1) & g.mask_;
      g.slots_[pos] = i;
    }
  };

  Permutation id = Permutation::identity(degree);
  g.insert(id.images());
  std::vector<std::uint32_t> layer{0};
  std::vector<Point> candidates;
  while (!layer.empty()) {
    candidates.clear();
    for (std::uint32_t x : layer) {
      for (const auto& s : g.generators_) {
        auto e = g.element(x);
        std::size_t base = candidates.size();
        candidates.resize(base + degree);
        for (std::size_t i = 0; i < degree; ++i) candidates[base + i] = s[e[i]];
        if (g.find(std::span<const Point>(candidates.data() + base, degree))) candidates.resize(base);
      }
    }
    std::size_t n = candidates.size() / degree;
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    auto row = [&](std::uint32_t i) { return std::span<const Point>(candidates.data() + std::size_t(i) * degree, degree); };
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return lex_less(row(a), row(b)); });
    layer.clear();
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) {
        auto a = row(order[k - 1]);
        auto b = row(order[k]);
        if (std::equal(a.begin(), a.end(), b.begin())) continue;
      }
      if (g.count_ + 1 > cap) {
        throw CapExceeded("group " + g.name_ + " exceeds the element cap of " + std::to_string(cap));
      }
      if (2 * (g.count_ + 1) > g.slots_.size()) grow();
      layer.push_back(g.count_);
      g.insert(row(order[k]));
    }
  }
  g.compute_classes();
  return g;
}

const std::vector<ConjugacyClass>& conjugacy_classes(const FiniteGroup& g) { return g.classes(); }

SubgroupEmbedding embed(GroupPtr parent, const std::vector<Permutation>& sub_generators, std::string sub_name) {
  std::vector<Permutation> gens;
  for (const auto& s : sub_generators) {
    Permutation p = s.degree() < parent->degree() ? s.extended(parent->degree()) : s;
    if (p.degree() != parent->degree() || !parent->find(p)) {
      throw NotASubgroup("generator " + s.cycles() + " is not an element of " + parent->name());
    }
    gens.push_back(std::move(p));
  }
  auto sub = std::make_shared<const FiniteGroup>(
      build_group(gens, parent->degree(), parent->order(), std::move(sub_name)));
  SubgroupEmbedding e{parent, sub, {}};
  e.inclusion.resize(sub->order());
  for (std::uint32_t i = 0; i < sub->order(); ++i) e.inclusion[i] = *parent->find(sub->element(i));
  return e;
}

SubgroupEmbedding embed_diagonal(const FiniteGroup& h, EmbeddingKind kind, std::size_t cap) {
  std::size_t d = h.degree();
  std::vector<Permutation> parent_gens;
  std::vector<Permutation> sub_gens;
  for (const auto& s : h.generators()) {
    Permutation left = s.shifted(0, 2 * d);
    Permutation right = s.shifted(d, 2 * d);
    parent_gens.push_back(left);
    parent_gens.push_back(right);
    sub_gens.push_back(kind == EmbeddingKind::diagonal ? left * right : left);
  }
  FamilyInfo fam{FamilyKind::product, 0, 0, std::nullopt,
                 "prod(" + h.family().descriptor + "," + h.family().descriptor + ")"};
  auto parent = std::make_shared<const FiniteGroup>(
      build_group(parent_gens, 2 * d, cap, h.name() + "x" + h.name(), fam));
  std::string sub_name = (kind == EmbeddingKind::diagonal ? "diag(" : "factor(") + h.name() + ")";
  return embed(parent, sub_gens, sub_name);
}

ClassFusion class_fusion(const SubgroupEmbedding& e) {
  ClassFusion f{e, {}, {}, {}};
  const auto& sub = *e.sub;
  const auto& parent = *e.parent;
  for (std::uint32_t c = 0; c < sub.class_count(); ++c) {
    std::uint32_t g_index = e.inclusion[sub.representative_index(c)];
    std::uint32_t gc = parent.class_of(g_index);
    f.fusion.push_back(gc);
    f.z_sub.push_back(sub.classes()[c].centralizer_order);
    f.z_parent.push_back(parent.classes()[gc].centralizer_order);
  }
  return f;
}

bool is_abelian(const FiniteGroup& g) { return g.class_count() == g.order(); }

std::uint64_t center_order(const FiniteGroup& g) {
  std::uint64_t z = 0;
  for (const auto& c : g.classes()) z += (c.size == 1);
  return z;
}

std::uint64_t involution_count(const FiniteGroup& g) {
  std::uint64_t n = 0;
  for (const auto& c : g.classes()) {
    if (c.element_order <= 2) n += c.size;
  }
  return n;
}

std::optional<std::uint32_t> nilpotency_class(const FiniteGroup& g) {
  if (g.order() == 1) return 0;
  std::vector<std::uint32_t> group_gens;
  for (const auto& s : g.generators()) group_gens.push_back(*g.find(s));
  std::vector<std::uint32_t> current(g.order());
  std::iota(current.begin(), current.end(), 0u);
  std::uint32_t steps = 0;
  while (current.size() > 1) {
    // [N, G] is the normal closure of commutators of N's elements with G's generators.
    std::vector<std::uint32_t> commutators;
    std::vector<char> seen(g.order(), 0);
    for (std::uint32_t x : current) {
      for (std::uint32_t s : group_gens) {
        std::uint32_t c = g.multiply(g.multiply(g.inverse(x), g.inverse(s)), g.multiply(x, s));
        if (c != 0 && !seen[c]) {
          seen[c] = 1;
          commutators.push_back(c);
        }
      }
    }
    auto next = members(normal_closure(g, commutators));
    ++steps;
    if (next.size() == current.size()) return std::nullopt;
    current = std::move(next);
  }
  return steps;
}

bool is_simple(const FiniteGroup& g) {
  if (g.order() == 1) return false;
  for (std::uint32_t c = 1; c < g.class_count(); ++c) {
    auto closure = normal_closure(g, {g.representative_index(c)});
    if (static_cast<std::uint64_t>(std::count(closure.begin(), closure.end(), 1)) != g.order()) return false;
  }
  return true;
}

}  // namespace mbx::group
