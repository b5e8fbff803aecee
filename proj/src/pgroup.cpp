#include "unitlab/pgroup.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace unitlab {

namespace {

bool is_p_power(long long n, int p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

uint64_t splitmix64_step(uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

// ---- Subgroup --------------------------------------------------------------

Subgroup::Subgroup(const PGroup& parent, std::vector<ElementId> members)
    : parent_(&parent), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.front() != kIdentity)
    throw PreconditionError("subgroup must contain the identity");
  if (!is_p_power(static_cast<long long>(members_.size()), parent.p()))
    throw PreconditionError("subgroup size is not a p-power");
  for (ElementId a : members_) {
    if (!contains(parent.inv(a))) throw PreconditionError("subgroup not closed under inverses");
    for (ElementId b : members_)
      if (!contains(parent.mul(a, b))) throw PreconditionError("subgroup not closed under products");
  }
}

bool Subgroup::contains(ElementId g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

int Subgroup::exponent() const {
  int e = 1;
  for (ElementId g : members_) e = std::max(e, parent_->element_order(g));
  return e;  // orders are p-powers, so max == lcm
}

bool Subgroup::is_cyclic() const {
  for (ElementId g : members_)
    if (parent_->element_order(g) == order()) return true;
  return false;
}

// ---- PGroup ----------------------------------------------------------------

PGroup::PGroup(Prime p, std::vector<uint16_t> table, std::string label)
    : p_(p), n_(0), table_(std::move(table)), label_(std::move(label)) {
  size_t sz = table_.size();
  int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(sz))));
  if (static_cast<size_t>(n) * n != sz) throw PreconditionError("table is not square");
  n_ = n;
  if (!is_p_power(n_, p_.value())) throw PreconditionError("group order is not a power of p");
  validate_table();
  compute_structure();
}

void PGroup::rebind_subgroups(const PGroup& other) {
  center_ = std::make_shared<Subgroup>(*this, other.center_->members());
  derived_ = std::make_shared<Subgroup>(*this, other.derived_->members());
  agemo_ = std::make_shared<Subgroup>(*this, other.agemo_->members());
  frattini_ = std::make_shared<Subgroup>(*this, other.frattini_->members());
}

PGroup::PGroup(const PGroup& o)
    : p_(o.p_), n_(o.n_), table_(o.table_), label_(o.label_), inverses_(o.inverses_),
      orders_(o.orders_), exponent_(o.exponent_), abelian_(o.abelian_),
      generators_(o.generators_), conjugacy_(o.conjugacy_) {
  rebind_subgroups(o);
}

PGroup::PGroup(PGroup&& o)
    : p_(o.p_), n_(o.n_), table_(std::move(o.table_)), label_(std::move(o.label_)),
      inverses_(std::move(o.inverses_)), orders_(std::move(o.orders_)), exponent_(o.exponent_),
      abelian_(o.abelian_), generators_(std::move(o.generators_)),
      conjugacy_(std::move(o.conjugacy_)) {
  rebind_subgroups(o);  // o's subgroup objects are intact; only their parent moved
}

PGroup& PGroup::operator=(const PGroup& o) {
  if (this == &o) return *this;
  p_ = o.p_;
  n_ = o.n_;
  table_ = o.table_;
  label_ = o.label_;
  inverses_ = o.inverses_;
  orders_ = o.orders_;
  exponent_ = o.exponent_;
  abelian_ = o.abelian_;
  generators_ = o.generators_;
  conjugacy_ = o.conjugacy_;
  rebind_subgroups(o);
  return *this;
}

PGroup& PGroup::operator=(PGroup&& o) {
  if (this == &o) return *this;
  p_ = o.p_;
  n_ = o.n_;
  table_ = std::move(o.table_);
  label_ = std::move(o.label_);
  inverses_ = std::move(o.inverses_);
  orders_ = std::move(o.orders_);
  exponent_ = o.exponent_;
  abelian_ = o.abelian_;
  generators_ = std::move(o.generators_);
  conjugacy_ = std::move(o.conjugacy_);
  rebind_subgroups(o);
  return *this;
}

void PGroup::validate_table() const {
  for (ElementId g = 0; g < n_; ++g) {
    if (mul(kIdentity, g) != g || mul(g, kIdentity) != g)
      throw PreconditionError("index 0 is not a two-sided identity");
  }
  // Each row and column must be a permutation.
  std::vector<char> seen(n_);
  for (ElementId a = 0; a < n_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (ElementId b = 0; b < n_; ++b) {
      ElementId c = mul(a, b);
      if (c < 0 || c >= n_ || seen[c]) throw PreconditionError("row is not a permutation");
      seen[c] = 1;
    }
  }
  // Associativity: exhaustive up to order 125, seeded random triples above.
  if (n_ <= 125) {
    for (ElementId a = 0; a < n_; ++a)
      for (ElementId b = 0; b < n_; ++b)
        for (ElementId c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw PreconditionError("table is not associative");
  } else {
    uint64_t s = 0x5eedULL ^ static_cast<uint64_t>(n_);
    for (int i = 0; i < 100000; ++i) {
      ElementId a = static_cast<ElementId>(splitmix64_step(s) % n_);
      ElementId b = static_cast<ElementId>(splitmix64_step(s) % n_);
      ElementId c = static_cast<ElementId>(splitmix64_step(s) % n_);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw PreconditionError("table is not associative");
    }
  }
}

void PGroup::compute_structure() {
  inverses_.assign(n_, -1);
  for (ElementId a = 0; a < n_; ++a) {
    for (ElementId b = 0; b < n_; ++b) {
      if (mul(a, b) == kIdentity && mul(b, a) == kIdentity) {
        inverses_[a] = b;
        break;
      }
    }
    if (inverses_[a] < 0) throw PreconditionError("element without two-sided inverse");
  }

  orders_.assign(n_, 0);
  for (ElementId g = 0; g < n_; ++g) {
    int ord = 1;
    ElementId x = g;
    while (x != kIdentity) {
      x = mul(x, g);
      ++ord;
    }
    if (!is_p_power(ord, p_.value())) throw PreconditionError("element order is not a p-power");
    orders_[g] = ord;
    exponent_ = std::max(exponent_, ord);
  }

  std::vector<ElementId> central;
  for (ElementId g = 0; g < n_; ++g) {
    bool c = true;
    for (ElementId h = 0; h < n_ && c; ++h) c = (mul(g, h) == mul(h, g));
    if (c) central.push_back(g);
  }
  abelian_ = (static_cast<int>(central.size()) == n_);
  center_ = std::make_shared<Subgroup>(*this, central);

  // Conjugacy classes as orbits under conjugation.
  std::vector<int> class_of(n_, -1);
  for (ElementId g = 0; g < n_; ++g) {
    if (class_of[g] >= 0) continue;
    int id = static_cast<int>(conjugacy_.classes.size());
    std::vector<ElementId> cls;
    std::deque<ElementId> work{g};
    class_of[g] = id;
    while (!work.empty()) {
      ElementId x = work.front();
      work.pop_front();
      cls.push_back(x);
      for (ElementId h = 0; h < n_; ++h) {
        ElementId y = conjugate(x, h);
        if (class_of[y] < 0) {
          class_of[y] = id;
          work.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    conjugacy_.representatives.push_back(cls.front());
    if (cls.size() >= 2) ++conjugacy_.t;
    conjugacy_.classes.push_back(std::move(cls));
  }

  std::vector<ElementId> comm_gens;
  for (ElementId g = 0; g < n_; ++g)
    for (ElementId h = 0; h < n_; ++h) comm_gens.push_back(commutator(g, h));
  derived_ = std::make_shared<Subgroup>(generated_subgroup(comm_gens));

  // Class equation specialization: |G'| = p forces every non-central class
  // to have size exactly p, so t = (|G| - |center|) / p.
  if (derived_->order() == p_.value()) {
    for (const auto& cls : conjugacy_.classes)
      if (cls.size() != 1 && static_cast<int>(cls.size()) != p_.value())
        throw Error("conjugacy class of size != p in a group with |G'| = p");
    if (conjugacy_.t * p_.value() + center_->order() != n_)
      throw Error("class equation violated");
  }

  std::vector<ElementId> p_powers;
  for (ElementId g = 0; g < n_; ++g) p_powers.push_back(pow(g, p_.value()));
  agemo_ = std::make_shared<Subgroup>(generated_subgroup(p_powers));

  std::vector<ElementId> frat_gens = p_powers;
  frat_gens.insert(frat_gens.end(), derived_->members().begin(), derived_->members().end());
  frattini_ = std::make_shared<Subgroup>(generated_subgroup(frat_gens));
}

ElementId PGroup::pow(ElementId g, long long e) const {
  int ord = orders_.empty() ? 0 : orders_[g];
  if (ord > 0) e %= ord;
  if (e < 0) {
    g = inv(g);
    e = -e;
  }
  ElementId acc = kIdentity, base = g;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

GroupInvariants PGroup::invariants() const {
  return GroupInvariants{n_, exponent_, center_->order(), center_->exponent()};
}

ElementId PGroup::generator(const std::string& name) const {
  auto it = generators_.find(name);
  if (it == generators_.end()) throw PreconditionError("no generator named '" + name + "'");
  return it->second;
}

ElementId PGroup::first_noncommuting(ElementId g) const {
  for (ElementId h = 0; h < n_; ++h)
    if (!commutes(g, h)) return h;
  return -1;
}

Subgroup PGroup::generated_subgroup(const std::vector<ElementId>& gens) const {
  std::vector<ElementId> gset = gens;
  std::sort(gset.begin(), gset.end());
  gset.erase(std::unique(gset.begin(), gset.end()), gset.end());
  std::vector<char> present(n_, 0);
  present[kIdentity] = 1;
  std::deque<ElementId> work{kIdentity};
  while (!work.empty()) {
    ElementId x = work.front();
    work.pop_front();
    for (ElementId g : gset) {
      ElementId y = mul(x, g);
      if (!present[y]) {
        present[y] = 1;
        work.push_back(y);
      }
    }
  }
  std::vector<ElementId> members;
  for (ElementId g = 0; g < n_; ++g)
    if (present[g]) members.push_back(g);
  return Subgroup(*this, members);
}

Subgroup PGroup::power_subgroup(int k) const {
  long long e = 1;
  for (int i = 0; i < k; ++i) e *= p_.value();
  std::vector<ElementId> gens;
  for (ElementId g = 0; g < n_; ++g) gens.push_back(pow(g, e));
  return generated_subgroup(gens);
}

// ---- Constructions ---------------------------------------------------------

namespace {

void check_cap(long long order, int cap) {
  if (order > cap) throw CapExceededError(order, cap);
}

long long ipow(int base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Table for <a, b | a^m = b^p = 1, b^-1 a b = a^s> in the normal form
// b^j a^i  <->  index j*m + i, with s^p = 1 (mod m) so the law closes.
std::vector<uint16_t> twisted_pair_table(int p, long long m, long long s) {
  long long n = m * p;
  std::vector<long long> s_pow(p, 1);
  for (int j = 1; j < p; ++j) s_pow[j] = (s_pow[j - 1] * s) % m;
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int j1 = 0; j1 < p; ++j1)
    for (long long i1 = 0; i1 < m; ++i1)
      for (int j2 = 0; j2 < p; ++j2)
        for (long long i2 = 0; i2 < m; ++i2) {
          int j = (j1 + j2) % p;
          long long i = (i1 * s_pow[j2] + i2) % m;
          table[static_cast<size_t>(j1 * m + i1) * n + (j2 * m + i2)] =
              static_cast<uint16_t>(j * m + i);
        }
  return table;
}

}  // namespace

PGroup build_cyclic(Prime p, int n, int cap) {
  if (n < 1) throw PreconditionError("cyclic group needs n >= 1");
  long long order = ipow(p.value(), n);
  check_cap(order, cap);
  std::vector<uint16_t> table(static_cast<size_t>(order) * order);
  for (long long i = 0; i < order; ++i)
    for (long long j = 0; j < order; ++j)
      table[static_cast<size_t>(i) * order + j] = static_cast<uint16_t>((i + j) % order);
  PGroup g(p, std::move(table), "cyclic(" + std::to_string(p.value()) + "," + std::to_string(n) + ")");
  g.set_generators({{"g", 1}});
  return g;
}

PGroup build_extraspecial(Prime p, ExtraspecialExp kind, int cap) {
  p.require_odd("build_extraspecial");
  if (kind == ExtraspecialExp::P2) {
    // At order p^3 the exponent-p^2 extraspecial group is M_{p^3}.
    PGroup g = build_modular_maximal_cyclic(p, 3, cap);
    return g;
  }
  int q = p.value();
  long long order = ipow(q, 3);
  check_cap(order, cap);
  // Heisenberg normal form (x, y, z), law (x1,y1,z1)(x2,y2,z2) =
  // (x1+x2, y1+y2, z1+z2+x1*y2); exponent p for odd p.
  auto idx = [&](int x, int y, int z) { return (x * q + y) * q + z; };
  std::vector<uint16_t> table(static_cast<size_t>(order) * order);
  for (int x1 = 0; x1 < q; ++x1)
    for (int y1 = 0; y1 < q; ++y1)
      for (int z1 = 0; z1 < q; ++z1)
        for (int x2 = 0; x2 < q; ++x2)
          for (int y2 = 0; y2 < q; ++y2)
            for (int z2 = 0; z2 < q; ++z2)
              table[static_cast<size_t>(idx(x1, y1, z1)) * order + idx(x2, y2, z2)] =
                  static_cast<uint16_t>(idx((x1 + x2) % q, (y1 + y2) % q, (z1 + z2 + x1 * y2) % q));
  PGroup g(p, std::move(table), "extraspecial(" + std::to_string(q) + ",p)");
  g.set_generators({{"a", idx(1, 0, 0)}, {"b", idx(0, 1, 0)}});
  return g;
}

PGroup build_modular_maximal_cyclic(Prime p, int n, int cap) {
  p.require_odd("build_modular_maximal_cyclic");
  if (n < 3) throw PreconditionError("M_{p^n} needs n >= 3");
  long long order = ipow(p.value(), n);
  check_cap(order, cap);
  long long m = ipow(p.value(), n - 1);
  long long s = 1 + ipow(p.value(), n - 2);
  PGroup g(p, twisted_pair_table(p.value(), m, s),
           "modular(" + std::to_string(p.value()) + "," + std::to_string(n) + ")");
  g.set_generators({{"a", 1}, {"b", static_cast<ElementId>(m)}});
  return g;
}

PGroup build_elementary_abelian(Prime p, int k, int cap) {
  if (k < 1) throw PreconditionError("elementary abelian group needs k >= 1");
  int q = p.value();
  long long order = ipow(q, k);
  check_cap(order, cap);
  // Indices are base-p digit vectors added componentwise.
  std::vector<uint16_t> table(static_cast<size_t>(order) * order);
  for (long long i = 0; i < order; ++i)
    for (long long j = 0; j < order; ++j) {
      long long a = i, b = j, r = 0, place = 1;
      for (int d = 0; d < k; ++d) {
        r += ((a + b) % q) * place;
        a /= q;
        b /= q;
        place *= q;
      }
      table[static_cast<size_t>(i) * order + j] = static_cast<uint16_t>(r);
    }
  PGroup g(p, std::move(table),
           "elem_abelian(" + std::to_string(q) + "," + std::to_string(k) + ")");
  g.set_generators({{"g", 1}});
  return g;
}

PGroup direct_product(const PGroup& g, const PGroup& h, int cap) {
  if (g.p() != h.p()) throw PreconditionError("direct product of groups over different primes");
  long long order = static_cast<long long>(g.order()) * h.order();
  check_cap(order, cap);
  int nh = h.order();
  std::vector<uint16_t> table(static_cast<size_t>(order) * order);
  for (int a1 = 0; a1 < g.order(); ++a1)
    for (int b1 = 0; b1 < nh; ++b1)
      for (int a2 = 0; a2 < g.order(); ++a2)
        for (int b2 = 0; b2 < nh; ++b2)
          table[static_cast<size_t>(a1 * nh + b1) * order + (a2 * nh + b2)] =
              static_cast<uint16_t>(g.mul(a1, a2) * nh + h.mul(b1, b2));
  return PGroup(g.prime(), std::move(table), g.label() + "x" + h.label());
}

Subgroup default_amalgam(const PGroup& l) {
  for (ElementId z : l.center().members())
    if (l.element_order(z) == l.p()) {
      std::vector<ElementId> members;
      ElementId x = kIdentity;
      do {
        members.push_back(x);
        x = l.mul(x, z);
      } while (x != kIdentity);
      return Subgroup(l, members);
    }
  throw PreconditionError("group has no central element of order p");
}

PGroup central_product(const PGroup& k, const PGroup& l, const Subgroup& amalgam, int cap) {
  if (k.p() != l.p()) throw PreconditionError("central product of groups over different primes");
  if (k.center().order() != k.p())
    throw PreconditionError("central product needs |center(K)| = p");
  if (&amalgam.parent() != &l) throw PreconditionError("amalgam is not a subgroup of L");
  if (amalgam.order() != l.p()) throw PreconditionError("amalgam must have order p");
  for (ElementId z : amalgam.members())
    if (!l.center().contains(z)) throw PreconditionError("amalgam is not central in L");
  long long order = static_cast<long long>(k.order()) * l.order() / k.p();
  check_cap(order, cap);

  // Anti-diagonal D = <(zk, za^-1)> with zk, za the minimal-index generators.
  ElementId zk = k.center().members()[1];
  ElementId za = amalgam.members()[1];
  int nl = l.order();
  long long nn = static_cast<long long>(k.order()) * nl;
  auto pair_idx = [&](ElementId a, ElementId b) { return static_cast<long long>(a) * nl + b; };

  std::vector<int> coset_of(nn, -1);
  std::vector<long long> rep;  // minimal pair index per coset, in increasing order
  for (long long e = 0; e < nn; ++e) {
    if (coset_of[e] >= 0) continue;
    int id = static_cast<int>(rep.size());
    rep.push_back(e);
    ElementId a = static_cast<ElementId>(e / nl), b = static_cast<ElementId>(e % nl);
    ElementId x = a, y = b;
    do {
      coset_of[pair_idx(x, y)] = id;
      x = k.mul(x, zk);
      y = l.mul(y, l.inv(za));
    } while (x != a);
  }
  if (static_cast<long long>(rep.size()) != order)
    throw PreconditionError("central product coset count mismatch");

  std::vector<uint16_t> table(static_cast<size_t>(order) * order);
  for (long long c1 = 0; c1 < order; ++c1)
    for (long long c2 = 0; c2 < order; ++c2) {
      ElementId a1 = static_cast<ElementId>(rep[c1] / nl), b1 = static_cast<ElementId>(rep[c1] % nl);
      ElementId a2 = static_cast<ElementId>(rep[c2] / nl), b2 = static_cast<ElementId>(rep[c2] % nl);
      table[static_cast<size_t>(c1) * order + c2] =
          static_cast<uint16_t>(coset_of[pair_idx(k.mul(a1, a2), l.mul(b1, b2))]);
    }
  return PGroup(k.prime(), std::move(table), "central(" + k.label() + "," + l.label() + ")");
}

PGroup build_dihedral8() {
  // <a, b | a^4 = b^2 = 1, b^-1 a b = a^-1>; same twisted normal form as M_8.
  PGroup g(Prime(2), twisted_pair_table(2, 4, 3), "dihedral(8)");
  g.set_generators({{"a", 1}, {"b", 4}});
  return g;
}

PGroup build_quaternion8() {
  // b^j a^i with a^4 = 1, b^2 = a^2, b^-1 a b = a^-1.
  auto idx = [](int j, int i) { return j * 4 + i; };
  std::vector<uint16_t> table(64);
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < 4; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < 4; ++i2) {
          // b^{j1} a^{i1} b^{j2} a^{i2} = b^{j1+j2} a^{-i1 if j2 else i1} a^{i2}, b^2 = a^2
          int i = ((j2 ? -i1 : i1) + i2 + (j1 && j2 ? 2 : 0)) % 4;
          if (i < 0) i += 4;
          int j = (j1 + j2) % 2;
          table[static_cast<size_t>(idx(j1, i1)) * 8 + idx(j2, i2)] = static_cast<uint16_t>(idx(j, i));
        }
  PGroup g(Prime(2), std::move(table), "quaternion(8)");
  g.set_generators({{"a", 1}, {"b", 4}});
  return g;
}

PGroup relabel(const PGroup& g, const std::vector<ElementId>& pi) {
  int n = g.order();
  if (static_cast<int>(pi.size()) != n || pi[kIdentity] != kIdentity)
    throw PreconditionError("relabeling must be a permutation fixing the identity");
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      table[static_cast<size_t>(pi[a]) * n + pi[b]] = static_cast<uint16_t>(pi[g.mul(a, b)]);
  return PGroup(g.prime(), std::move(table), g.label() + "#relabeled");
}

}  // namespace unitlab
