#include "latkit/monoid.hpp"

#include <algorithm>
#include <map>

#include "latkit/errors.hpp"

namespace latkit {

FiniteMonoid::FiniteMonoid(std::size_t size, std::vector<Element> table, Element identity)
    : size_(size), table_(std::move(table)), identity_(identity) {
  if (size_ == 0) throw InvalidInput("monoid must be nonempty");
  if (table_.size() != size_ * size_) throw InvalidInput("Cayley table has wrong size");
  if (identity_ >= size_) throw InvalidInput("identity out of range");
  for (Element v : table_) {
    if (v >= size_) throw InvalidInput("Cayley table entry out of range");
  }
  for (Element a = 0; a < size_; ++a) {
    if (op(identity_, a) != a || op(a, identity_) != a) {
      throw InvalidInput("identity law fails at " + std::to_string(a));
    }
    for (Element b = 0; b < size_; ++b) {
      if (op(a, b) != op(b, a)) commutative_ = false;
      for (Element c = 0; c < size_; ++c) {
        if (op(op(a, b), c) != op(a, op(b, c))) {
          throw InvalidInput("associativity fails at (" + std::to_string(a) + ", " +
                             std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
}

FiniteMonoid FiniteMonoid::from_table(std::size_t size, std::vector<Element> table) {
  if (table.size() != size * size) throw InvalidInput("Cayley table has wrong size");
  for (Element e = 0; e < size; ++e) {
    bool unit = true;
    for (Element a = 0; a < size && unit; ++a) {
      unit = table[e * size + a] == a && table[a * size + e] == a;
    }
    if (unit) return FiniteMonoid(size, std::move(table), e);
  }
  throw InvalidInput("Cayley table has no identity");
}

namespace {

template <typename F>
FiniteMonoid monoid_from(std::size_t n, F&& f) {
  std::vector<Element> t(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) t[a * n + b] = f(a, b);
  }
  return FiniteMonoid(n, std::move(t), 0);
}

}  // namespace

FiniteMonoid cyclic_group(std::size_t n) {
  return monoid_from(n, [n](Element a, Element b) { return (a + b) % n; });
}

FiniteMonoid max_monoid(std::size_t n) {
  return monoid_from(n, [](Element a, Element b) { return std::max(a, b); });
}

FiniteMonoid truncated_addition(std::size_t n) {
  return monoid_from(n, [n](Element a, Element b) { return std::min(a + b, n - 1); });
}

std::vector<FiniteMonoid> enumerate_commutative_monoids(std::size_t n) {
  if (n == 0 || n > 4) throw InvalidInput("enumerate_commutative_monoids: size must be 1..4");
  std::vector<std::pair<Element, Element>> cells;
  for (Element a = 1; a < n; ++a) {
    for (Element b = a; b < n; ++b) cells.emplace_back(a, b);
  }
  std::vector<FiniteMonoid> out;
  std::vector<Element> t(n * n);
  for (Element a = 0; a < n; ++a) t[a] = t[a * n] = a;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) total *= n;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (const auto& [a, b] : cells) {
      t[a * n + b] = t[b * n + a] = static_cast<Element>(c % n);
      c /= n;
    }
    bool assoc = true;
    for (Element a = 1; a < n && assoc; ++a) {
      for (Element b = 1; b < n && assoc; ++b) {
        for (Element d = 1; d < n && assoc; ++d) {
          assoc = t[t[a * n + b] * n + d] == t[a * n + t[b * n + d]];
        }
      }
    }
    if (assoc) out.emplace_back(n, t, 0);
  }
  return out;
}

QuasiOrder associated_order(const FiniteMonoid& M) {
  const std::size_t n = M.size();
  std::vector<Subset> up(n, Subset(n));
  for (Element x = 0; x < n; ++x) {
    for (Element a = 0; a < n; ++a) up[x].insert(M.op(x, a));
  }
  return QuasiOrder::from_up_sets(std::move(up));
}

bool is_cancellative(const FiniteMonoid& M) {
  const std::size_t n = M.size();
  for (Element a = 0; a < n; ++a) {
    Subset left(n), right(n);
    for (Element b = 0; b < n; ++b) {
      if (left.contains(M.op(a, b)) || right.contains(M.op(b, a))) return false;
      left.insert(M.op(a, b));
      right.insert(M.op(b, a));
    }
  }
  return true;
}

Subset invertibles(const FiniteMonoid& M) {
  Subset out(M.size());
  for (Element a = 0; a < M.size(); ++a) {
    for (Element b = 0; b < M.size(); ++b) {
      if (M.op(a, b) == M.identity() && M.op(b, a) == M.identity()) {
        out.insert(a);
        break;
      }
    }
  }
  return out;
}

bool is_group(const FiniteMonoid& M) { return invertibles(M).count() == M.size(); }

MonoidClass monoid_class(const FiniteMonoid& M) {
  MonoidClass c;
  c.commutative = M.is_commutative();
  c.cancellative = is_cancellative(M);
  c.invertibles = invertibles(M);
  const QuasiOrder order = associated_order(M);
  c.poset_monoid = order.is_partial_order();
  if (c.poset_monoid) {
    const LatticeView L(order);
    c.semilattice_monoid = L.is_join_semilattice();
    c.lattice_monoid = L.is_lattice();
  }
  return c;
}

Difference subtract(const FiniteMonoid& M, Element a, Element b) {
  Difference d;
  for (Element c = 0; c < M.size(); ++c) {
    if (M.op(c, b) == a) {
      ++d.solutions;
      d.value = c;
    }
  }
  if (d.solutions != 1) d.value.reset();
  return d;
}

GroupCompletion group_completion(const FiniteMonoid& M) {
  if (!M.is_commutative()) throw PreconditionFailed("group completion requires a commutative monoid");
  if (!is_cancellative(M)) throw NotCancellative();
  const std::size_t n = M.size();
  const Element zero = M.identity();
  Subset N = invertibles(M).complement();
  N.insert(zero);
  const std::vector<Element> ns = N.indices();

  // Pairs (a, b) in M x N, ordered lexicographically.
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < n; ++a) {
    for (Element b : ns) pairs.emplace_back(a, b);
  }
  auto related = [&](const std::pair<Element, Element>& x, const std::pair<Element, Element>& y) {
    for (Element r : ns) {
      for (Element s : ns) {
        if (M.op(x.first, r) == M.op(y.first, s) && M.op(x.second, r) == M.op(y.second, s)) {
          return true;
        }
      }
    }
    return false;
  };
  std::vector<std::size_t> class_of(pairs.size(), pairs.size());
  GroupCompletion out{FiniteMonoid(1, {0}, 0), {}, {}};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (class_of[i] != pairs.size()) continue;
    const std::size_t c = out.representatives.size();
    out.representatives.push_back(pairs[i]);
    for (std::size_t j = i; j < pairs.size(); ++j) {
      if (related(pairs[i], pairs[j])) {
        if (class_of[j] != pairs.size()) throw Error("group completion: relation is not an equivalence");
        class_of[j] = c;
      }
    }
  }
  auto index_of = [&](Element a, Element b) {
    const auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b));
    return class_of[static_cast<std::size_t>(it - pairs.begin())];
  };
  const std::size_t k = out.representatives.size();
  std::vector<Element> table(k * k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      const auto [a, b] = out.representatives[x];
      const auto [c, d] = out.representatives[y];
      table[x * k + y] = index_of(M.op(a, c), M.op(b, d));
    }
  }
  out.group = FiniteMonoid(k, std::move(table), index_of(zero, zero));
  out.embedding.resize(n);
  for (Element a = 0; a < n; ++a) out.embedding[a] = index_of(a, zero);
  return out;
}

VectorMonoid::VectorMonoid(std::size_t index_count, bool integers)
    : n_(index_count), integers_(integers) {}

void VectorMonoid::require_arity(const Vec& v) const {
  if (v.size() != n_) throw InvalidInput("vector has wrong number of coordinates");
}

bool VectorMonoid::contains(const Vec& v) const {
  if (v.size() != n_) return false;
  return integers_ || std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
}

Vec VectorMonoid::chi(std::size_t i) const {
  if (i >= n_) throw InvalidInput("unit vector index out of range");
  Vec v(n_, 0);
  v[i] = 1;
  return v;
}

Vec VectorMonoid::add(const Vec& a, const Vec& b) const {
  require_arity(a);
  require_arity(b);
  Vec out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = a[i] + b[i];
  return out;
}

std::optional<Vec> VectorMonoid::subtract(const Vec& a, const Vec& b) const {
  require_arity(a);
  require_arity(b);
  Vec out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = a[i] - b[i];
  if (!contains(out)) return std::nullopt;
  return out;
}

Vec VectorMonoid::negate(const Vec& a) const {
  if (!integers_) throw PreconditionFailed("negation requires integer vectors");
  require_arity(a);
  Vec out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = -a[i];
  return out;
}

bool VectorMonoid::leq(const Vec& a, const Vec& b) const { return subtract(b, a).has_value(); }

Vec VectorMonoid::join(const Vec& a, const Vec& b) const {
  require_arity(a);
  require_arity(b);
  Vec out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Vec VectorMonoid::meet(const Vec& a, const Vec& b) const {
  require_arity(a);
  require_arity(b);
  Vec out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

Vec VectorMonoid::random_element(std::mt19937_64& rng, std::int64_t bound) const {
  Vec v(n_);
  const auto span = static_cast<std::uint64_t>(integers_ ? 2 * bound + 1 : bound + 1);
  for (auto& x : v) {
    x = static_cast<std::int64_t>(rng() % span) - (integers_ ? bound : 0);
  }
  return v;
}

namespace {

// Box [0, bound]^I enumerated in base-(bound+1) order.
std::vector<Vec> box(std::size_t dims, std::int64_t bound) {
  std::vector<Vec> out{Vec{}};
  for (std::size_t i = 0; i < dims; ++i) {
    std::vector<Vec> next;
    for (const Vec& v : out) {
      for (std::int64_t x = 0; x <= bound; ++x) {
        Vec w = v;
        w.push_back(x);
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

MonoidClass monoid_class(const VectorMonoid& V, std::int64_t bound) {
  if (V.integers()) throw PreconditionFailed("box classification applies to N^I");
  const std::vector<Vec> carrier = box(V.index_count(), bound);
  if (carrier.size() > 4096) throw InvalidInput("box too large for classification");
  const std::size_t n = carrier.size();
  std::map<Vec, Element> index;
  for (Element i = 0; i < n; ++i) index[carrier[i]] = i;
  // d = y - x lies in the box whenever it is nonnegative, so the restriction
  // of the associated order is decided inside the box.
  const QuasiOrder order = QuasiOrder::from_relation(
      n, [&](Element x, Element y) { return V.leq(carrier[x], carrier[y]); });
  MonoidClass c;
  c.commutative = true;
  c.poset_monoid = order.is_partial_order();
  c.invertibles = Subset(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (V.add(carrier[a], carrier[b]) == V.zero()) c.invertibles.insert(a);
    }
  }
  if (c.poset_monoid) {
    const LatticeView L(order);
    c.semilattice_monoid = L.is_join_semilattice();
    c.lattice_monoid = L.is_lattice();
    for (Element a = 0; a < n && c.lattice_monoid; ++a) {
      for (Element b = 0; b < n && c.lattice_monoid; ++b) {
        c.lattice_monoid = carrier[L.join_unchecked(a, b)] == V.join(carrier[a], carrier[b]) &&
                           carrier[L.meet_unchecked(a, b)] == V.meet(carrier[a], carrier[b]);
      }
    }
  }
  c.cancellative = true;
  std::map<Vec, Element> seen;
  for (Element a = 0; a < n && c.cancellative; ++a) {
    seen.clear();
    for (Element b = 0; b < n && c.cancellative; ++b) {
      c.cancellative = seen.emplace(V.add(carrier[a], carrier[b]), b).second;
    }
  }
  return c;
}

VectorCompletion::VectorCompletion(const VectorMonoid& V)
    : base_(V), group_(V.index_count(), true) {
  if (V.integers()) throw PreconditionFailed("completion expects N^I");
}

VectorCompletion::Class VectorCompletion::make(const Vec& a, const Vec& b) const {
  if (!base_.contains(a) || !base_.contains(b)) throw InvalidInput("pair outside N^I");
  const Vec m = base_.meet(a, b);
  return {*base_.subtract(a, m), *base_.subtract(b, m)};
}

VectorCompletion::Class VectorCompletion::add(const Class& x, const Class& y) const {
  return make(base_.add(x.first, y.first), base_.add(x.second, y.second));
}

VectorCompletion::Class VectorCompletion::negate(const Class& x) const {
  return {x.second, x.first};
}

std::optional<std::pair<Vec, Vec>> VectorCompletion::equivalence_witness(const Vec& a, const Vec& b,
                                                                         const Vec& c,
                                                                         const Vec& d) const {
  // a - b = c - d in Z^I iff a + d = c + b; then r = d and s = b work.
  if (base_.add(a, d) != base_.add(c, b)) return std::nullopt;
  return std::make_pair(d, b);
}

Vec VectorCompletion::to_integers(const Class& x) const {
  Vec out(base_.index_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.first[i] - x.second[i];
  return out;
}

VectorCompletion::Class VectorCompletion::from_integers(const Vec& z) const {
  if (!group_.contains(z)) throw InvalidInput("vector has wrong number of coordinates");
  Vec pos(z.size()), neg(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    pos[i] = std::max<std::int64_t>(z[i], 0);
    neg[i] = std::max<std::int64_t>(-z[i], 0);
  }
  return {pos, neg};
}

std::string to_string(DistributiveLaw law) {
  switch (law) {
    case DistributiveLaw::plus_join: return "plus_join";
    case DistributiveLaw::plus_meet: return "plus_meet";
    case DistributiveLaw::plus_join_inf: return "plus_join_inf";
    case DistributiveLaw::plus_meet_inf: return "plus_meet_inf";
  }
  return "unknown";
}

std::optional<DistributiveLaw> distributive_law_from_string(const std::string& name) {
  for (auto law : {DistributiveLaw::plus_join, DistributiveLaw::plus_meet,
                   DistributiveLaw::plus_join_inf, DistributiveLaw::plus_meet_inf}) {
    if (to_string(law) == name) return law;
  }
  return std::nullopt;
}

namespace {

std::vector<Vec> encode(std::initializer_list<Element> xs) {
  std::vector<Vec> out;
  for (Element x : xs) out.push_back(Vec{static_cast<std::int64_t>(x)});
  return out;
}

std::vector<Vec> encode_set(Element a, const Subset& B) {
  std::vector<Vec> out{Vec{static_cast<std::int64_t>(a)}};
  Vec members;
  B.for_each([&](Element b) { members.push_back(static_cast<std::int64_t>(b)); });
  out.push_back(std::move(members));
  return out;
}

bool is_join_law(DistributiveLaw law) {
  return law == DistributiveLaw::plus_join || law == DistributiveLaw::plus_join_inf;
}

}  // namespace

LawReport check_distributivity(const FiniteMonoid& M, DistributiveLaw law) {
  const QuasiOrder order = associated_order(M);
  if (!order.is_partial_order()) {
    throw PreconditionFailed("distributive laws need a partial associated order");
  }
  const bool join = is_join_law(law);
  const QuasiOrder& P = order;
  auto bound = [&](const Subset& B) { return join ? sup(P, B) : inf(P, B); };
  const std::size_t n = M.size();
  LawReport r;
  r.law = to_string(law);

  if (law == DistributiveLaw::plus_join || law == DistributiveLaw::plus_meet) {
    const LatticeView L(order);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          const auto bc = join ? L.join(b, c) : L.meet(b, c);
          if (!bc) continue;
          ++r.instances;
          const auto rhs = join ? L.join(M.op(a, b), M.op(a, c)) : L.meet(M.op(a, b), M.op(a, c));
          if (!rhs || *rhs != M.op(a, *bc)) {
            r.holds = false;
            r.witness = encode({a, b, c});
            r.note = join ? "a.(b v c) != (a.b) v (a.c)" : "a.(b ^ c) != (a.b) ^ (a.c)";
            return r;
          }
        }
      }
    }
    return r;
  }

  auto check_family = [&](const Subset& B) {
    if (B.empty()) return true;
    const auto big = bound(B);
    if (!big) return true;
    for (Element a = 0; a < n; ++a) {
      Subset image(n);
      B.for_each([&](Element b) { image.insert(M.op(a, b)); });
      ++r.instances;
      const auto rhs = bound(image);
      if (!rhs || *rhs != M.op(a, *big)) {
        r.holds = false;
        r.witness = encode_set(a, B);
        r.note = join ? "a.sup B != sup a.B" : "a.inf B != inf a.B";
        return false;
      }
    }
    return true;
  };
  if (n <= 14) {
    bool ok = true;
    for_each_subset(Subset::full(n), [&](const Subset& B) {
      if (ok) ok = check_family(B);
    });
    return r;
  }
  r.exhaustive = false;
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      for (Element z = y; z < n; ++z) {
        if (!check_family(Subset::of(n, {x, y, z}))) return r;
      }
    }
  }
  return r;
}

LawReport check_distributivity(const VectorMonoid& V, DistributiveLaw law, std::uint64_t samples,
                               std::uint64_t seed, std::int64_t bound) {
  std::mt19937_64 rng(seed);
  LawReport r;
  r.law = to_string(law);
  r.exhaustive = false;
  r.seed = seed;
  const bool join = is_join_law(law);
  const bool binary = law == DistributiveLaw::plus_join || law == DistributiveLaw::plus_meet;
  auto combine = [&](const Vec& x, const Vec& y) { return join ? V.join(x, y) : V.meet(x, y); };
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Vec a = V.random_element(rng, bound);
    const std::size_t count = binary ? 2 : 1 + static_cast<std::size_t>(rng() % 4);
    std::vector<Vec> B;
    for (std::size_t i = 0; i < count; ++i) B.push_back(V.random_element(rng, bound));
    Vec big = B.front();
    Vec rhs = V.add(a, B.front());
    for (std::size_t i = 1; i < B.size(); ++i) {
      big = combine(big, B[i]);
      rhs = combine(rhs, V.add(a, B[i]));
    }
    ++r.instances;
    if (V.add(a, big) != rhs) {
      r.holds = false;
      r.witness = {a};
      r.witness.insert(r.witness.end(), B.begin(), B.end());
      r.note = join ? "a + sup B != sup (a + B)" : "a + inf B != inf (a + B)";
      return r;
    }
  }
  return r;
}

LawReport check_disjoint_sum_laws(const FiniteMonoid& M) {
  const QuasiOrder order = associated_order(M);
  if (!order.is_partial_order()) {
    throw PreconditionFailed("disjoint sum laws need a partial associated order");
  }
  const LatticeView L(order);
  const Element zero = M.identity();
  const std::size_t n = M.size();
  LawReport r;
  r.law = "disjoint_sum";
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (L.meet(a, b) == zero) {
        ++r.instances;
        if (L.join(a, b) != M.op(a, b)) {
          r.holds = false;
          r.witness = encode({a, b});
          r.note = "a ^ b = 0 but a v b != a + b";
          return r;
        }
      }
      for (Element c = 0; c < n; ++c) {
        if (L.meet(a, c) != zero || L.meet(b, c) != zero) continue;
        ++r.instances;
        if (L.meet(M.op(a, b), c) != zero) {
          r.holds = false;
          r.witness = encode({a, b, c});
          r.note = "a ^ c = b ^ c = 0 but (a + b) ^ c != 0";
          return r;
        }
      }
    }
  }
  return r;
}

LawReport check_disjoint_sum_laws(const VectorMonoid& V, std::uint64_t samples, std::uint64_t seed,
                                  std::int64_t bound) {
  std::mt19937_64 rng(seed);
  LawReport r;
  r.law = "disjoint_sum";
  r.exhaustive = false;
  r.seed = seed;
  // Half the coordinates are zeroed on average so the premises hold often.
  auto sparse = [&] {
    Vec v = V.random_element(rng, bound);
    for (auto& x : v) {
      if (rng() & 1u) x = 0;
    }
    return v;
  };
  const Vec zero = V.zero();
  std::uint64_t draws = 0;
  while (r.instances < samples && draws < 100 * samples + 100) {
    ++draws;
    const Vec a = sparse(), b = sparse(), c = sparse();
    if (V.meet(a, b) == zero) {
      ++r.instances;
      if (V.join(a, b) != V.add(a, b)) {
        r.holds = false;
        r.witness = {a, b};
        r.note = "a ^ b = 0 but a v b != a + b";
        return r;
      }
    }
    if (V.meet(a, c) == zero && V.meet(b, c) == zero) {
      ++r.instances;
      if (V.meet(V.add(a, b), c) != zero) {
        r.holds = false;
        r.witness = {a, b, c};
        r.note = "a ^ c = b ^ c = 0 but (a + b) ^ c != 0";
        return r;
      }
    }
  }
  return r;
}

LawReport check_subtraction_laws(const FiniteMonoid& M) {
  const QuasiOrder order = associated_order(M);
  const std::size_t n = M.size();
  LawReport r;
  r.law = "subtraction_monotone";
  for (Element a = 0; a < n; ++a) {
    for (Element c = 0; c < n; ++c) {
      const Difference ac = subtract(M, a, c);
      if (!ac.value) continue;
      for (Element b = 0; b < n; ++b) {
        if (order.leq(b, c)) {
          ++r.instances;
          const Difference ab = subtract(M, a, b);
          if (!ab.value || !order.leq(*ac.value, *ab.value)) {
            r.holds = false;
            r.witness = encode({a, b, c});
            r.note = ab.value ? "b <= c but a - b < a - c fails"
                              : "b <= c but a - b has " + std::to_string(ab.solutions) +
                                    " solutions";
            return r;
          }
        }
        if (order.leq(a, b)) {
          ++r.instances;
          const Difference bc = subtract(M, b, c);
          if (!bc.value || !order.leq(*ac.value, *bc.value)) {
            r.holds = false;
            r.witness = encode({a, b, c});
            r.note = bc.value ? "a <= b but a - c <= b - c fails"
                              : "a <= b but b - c has " + std::to_string(bc.solutions) +
                                    " solutions";
            return r;
          }
        }
      }
    }
  }
  return r;
}

LawReport check_subtraction_laws(const VectorMonoid& V, std::uint64_t samples, std::uint64_t seed,
                                 std::int64_t bound) {
  std::mt19937_64 rng(seed);
  LawReport r;
  r.law = "subtraction_monotone";
  r.exhaustive = false;
  r.seed = seed;
  for (std::uint64_t s = 0; s < samples; ++s) {
    // a = c + d so that a - c exists.
    const Vec c = V.random_element(rng, bound);
    const Vec a = V.add(c, V.random_element(rng, bound));
    const Vec e = V.random_element(rng, bound);
    const Vec b_below = V.meet(c, e);  // b <= c
    const Vec b_above = V.add(a, e);   // a <= b
    const Vec ac = *V.subtract(a, c);
    ++r.instances;
    const auto ab = V.subtract(a, b_below);
    if (!ab || !V.leq(ac, *ab)) {
      r.holds = false;
      r.witness = {a, b_below, c};
      r.note = "b <= c but a - b >= a - c fails";
      return r;
    }
    ++r.instances;
    const auto bc = V.subtract(b_above, c);
    if (!bc || !V.leq(ac, *bc)) {
      r.holds = false;
      r.witness = {a, b_above, c};
      r.note = "a <= b but a - c <= b - c fails";
      return r;
    }
  }
  return r;
}

Verdict closed_under_subtraction(const FiniteMonoid& M, const Subset& S) {
  std::optional<Verdict> failure;
  S.for_each([&](Element a) {
    S.for_each([&](Element b) {
      if (failure) return;
      const Difference d = subtract(M, a, b);
      if (d.value && !S.contains(*d.value)) {
        failure = Verdict::fail({a, b}, "a - b leaves the subset");
      }
    });
  });
  return failure ? *failure : Verdict::pass();
}

LawReport closed_under_subtraction(const VectorMonoid& V, const std::function<bool(const Vec&)>& S,
                                   std::int64_t bound, std::uint64_t samples, std::uint64_t seed) {
  LawReport r;
  r.law = "closed_under_subtraction";
  auto check = [&](const Vec& a, const Vec& b) {
    if (!S(a) || !S(b)) return true;
    const auto d = V.subtract(a, b);
    if (!d) return true;
    ++r.instances;
    if (S(*d)) return true;
    r.holds = false;
    r.witness = {a, b};
    r.note = "a - b leaves the subset";
    return false;
  };
  if (samples == 0) {
    const std::vector<Vec> carrier = box(V.index_count(), bound);
    for (const Vec& a : carrier) {
      for (const Vec& b : carrier) {
        if (!check(a, b)) return r;
      }
    }
    return r;
  }
  r.exhaustive = false;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Vec a = V.random_element(rng, bound);
    const Vec b = V.random_element(rng, bound);
    if (!check(a, b)) return r;
  }
  return r;
}

}  // namespace latkit
