#include "unitlab/fp_algebra.hpp"

#include <algorithm>
#include <numeric>

namespace unitlab {

AlgebraElement AlgebraElement::from_group_element(const PGroup& g, ElementId e) {
  if (e < 0 || e >= g.order()) throw PreconditionError("element id out of range");
  AlgebraElement x(g);
  x.c_[e] = 1;
  return x;
}

AlgebraElement AlgebraElement::scalar(const PGroup& g, int value) {
  AlgebraElement x(g);
  value %= g.p();
  if (value < 0) value += g.p();
  x.c_[kIdentity] = static_cast<uint8_t>(value);
  return x;
}

void AlgebraElement::set_coeff(ElementId g, int value) {
  value %= p();
  if (value < 0) value += p();
  c_[g] = static_cast<uint8_t>(value);
}

bool AlgebraElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](uint8_t v) { return v == 0; });
}

bool AlgebraElement::is_one() const {
  if (c_[kIdentity] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

void require_same_group(const AlgebraElement& a, const AlgebraElement& b) {
  if (&a.group() != &b.group())
    throw PreconditionError("algebra elements belong to different groups");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  require_same_group(*this, rhs);
  int q = p();
  for (size_t i = 0; i < c_.size(); ++i) c_[i] = static_cast<uint8_t>((c_[i] + rhs.c_[i]) % q);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  require_same_group(*this, rhs);
  int q = p();
  for (size_t i = 0; i < c_.size(); ++i)
    c_[i] = static_cast<uint8_t>((c_[i] + q - rhs.c_[i]) % q);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const { return scaled(p() - 1); }

AlgebraElement AlgebraElement::scaled(int scalar) const {
  int q = p();
  scalar %= q;
  if (scalar < 0) scalar += q;
  AlgebraElement out(*group_);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = static_cast<uint8_t>((c_[i] * scalar) % q);
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_group(a, b);
  const PGroup& g = a.group();
  int n = g.order(), q = g.p();
  // Gather over the support of a: out[k] = sum a[i] * b[inv(i) k]; each output
  // coordinate is independent, so the loop parallelizes without races.
  std::vector<ElementId> support;
  support.reserve(16);
  for (ElementId i = 0; i < n; ++i)
    if (a.coeff(i) != 0) support.push_back(i);
  std::vector<ElementId> inv_support(support.size());
  for (size_t s = 0; s < support.size(); ++s) inv_support[s] = g.inv(support[s]);

  AlgebraElement out(g);
#pragma omp parallel for schedule(static) if (n >= 128 && support.size() >= 16)
  for (ElementId k = 0; k < n; ++k) {
    uint32_t acc = 0;
    for (size_t s = 0; s < support.size(); ++s)
      acc += static_cast<uint32_t>(a.coeff(support[s])) * b.coeff(g.mul(inv_support[s], k));
    out.set_coeff(k, static_cast<int>(acc % static_cast<uint32_t>(q)));
  }
  return out;
}

AlgebraElement mul_serial(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_group(a, b);
  const PGroup& g = a.group();
  int n = g.order(), q = g.p();
  std::vector<uint32_t> acc(n, 0);
  for (ElementId i = 0; i < n; ++i) {
    if (a.coeff(i) == 0) continue;
    uint32_t ai = a.coeff(i);
    for (ElementId j = 0; j < n; ++j)
      if (b.coeff(j) != 0) acc[g.mul(i, j)] += ai * b.coeff(j);
  }
  AlgebraElement out(g);
  for (ElementId k = 0; k < n; ++k) out.set_coeff(k, static_cast<int>(acc[k] % static_cast<uint32_t>(q)));
  return out;
}

std::string AlgebraElement::str() const {
  std::string s;
  for (ElementId g = 0; g < size(); ++g) {
    if (c_[g] == 0) continue;
    if (!s.empty()) s += " + ";
    if (c_[g] != 1 || g == kIdentity) s += std::to_string(static_cast<int>(c_[g]));
    if (g != kIdentity) {
      if (c_[g] != 1) s += "*";
      s += "g" + std::to_string(g);
    }
  }
  return s.empty() ? "0" : s;
}

int augmentation(const AlgebraElement& x) {
  uint32_t acc = 0;
  for (ElementId g = 0; g < x.size(); ++g) acc += x.coeff(g);
  return static_cast<int>(acc % static_cast<uint32_t>(x.p()));
}

AlgebraElement class_sum(const PGroup& g, const std::vector<ElementId>& members) {
  AlgebraElement x(g);
  for (ElementId e : members) x.set_coeff(e, 1);
  return x;
}

AlgebraElement subgroup_sum(const Subgroup& s) { return class_sum(s.parent(), s.members()); }

AlgebraElement invert_normalized(const AlgebraElement& x) {
  int aug = augmentation(x);
  if (aug == 0) throw PreconditionError("element has augmentation 0, not a unit");
  int p = x.p();
  // Scale to augmentation 1, invert 1 + n, scale back.
  int inv_aug = 1;
  for (int e = 0; e < p - 2; ++e) inv_aug = (inv_aug * aug) % p;
  AlgebraElement n = x.scaled(inv_aug) - AlgebraElement::one(x.group());
  AlgebraElement acc = AlgebraElement::one(x.group());
  AlgebraElement term = AlgebraElement::one(x.group());
  for (int k = 0; k < x.group().order(); ++k) {
    term = -(term * n);
    if (term.is_zero()) break;
    acc += term;
  }
  return acc.scaled(inv_aug);
}

AlgebraElement power(const AlgebraElement& x, long long m) {
  if (m < 0) throw PreconditionError("negative exponent; invert first");
  AlgebraElement acc = AlgebraElement::one(x.group());
  AlgebraElement base = x;
  while (m > 0) {
    if (m & 1) acc = acc * base;
    base = base * base;
    m >>= 1;
  }
  return acc;
}

long long unit_order(const AlgebraElement& x) {
  if (augmentation(x) != 1) throw PreconditionError("unit_order expects a normalized unit");
  long long ord = 1;
  AlgebraElement y = x;
  int p = x.p();
  // |V| is a p-power, so the order is the least p-power k with x^k = 1.
  while (!y.is_one()) {
    y = power(y, p);
    ord *= p;
    if (ord > (1LL << 40)) throw Error("unit order runaway");
  }
  return ord;
}

bool commutator_subspace_test(const AlgebraElement& x) {
  const auto& part = x.group().conjugacy_partition();
  for (const auto& cls : part.classes) {
    uint32_t acc = 0;
    for (ElementId g : cls) acc += x.coeff(g);
    if (acc % static_cast<uint32_t>(x.p()) != 0) return false;
  }
  return true;
}

Subspace commutator_subspace(const PGroup& g) {
  int n = g.order();
  Subspace span(g.p(), n);
  std::vector<uint8_t> row(n, 0);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a + 1; b < n; ++b) {
      ElementId ab = g.mul(a, b), ba = g.mul(b, a);
      if (ab == ba) continue;
      std::fill(row.begin(), row.end(), 0);
      row[ab] = 1;
      row[ba] = static_cast<uint8_t>(g.p() - 1);
      span.insert(row);
    }
  return span;
}

std::vector<ElementId> generating_set(const PGroup& g) {
  std::vector<ElementId> gens;
  Subgroup so_far = g.generated_subgroup({});
  for (ElementId e = 1; e < g.order() && so_far.order() < g.order(); ++e) {
    if (so_far.contains(e)) continue;
    gens.push_back(e);
    so_far = g.generated_subgroup(gens);
  }
  return gens;
}

Subspace center_subspace(const PGroup& g) {
  int n = g.order();
  Subspace span(g.p(), n);
  for (const auto& cls : g.conjugacy_partition().classes) span.insert(class_sum(g, cls).coeffs());

  // Cross-check: the nullspace of { x g - g x = 0 : g in a generating set }.
  // Coefficient-wise, (xg)[k] = x[k g^-1] and (gx)[k] = x[g^-1 k].
  std::vector<std::vector<uint8_t>> constraints;
  for (ElementId gen : generating_set(g)) {
    ElementId gi = g.inv(gen);
    for (ElementId k = 0; k < n; ++k) {
      ElementId u = g.mul(k, gi), v = g.mul(gi, k);
      if (u == v) continue;
      std::vector<uint8_t> row(n, 0);
      row[u] = 1;
      row[v] = static_cast<uint8_t>(g.p() - 1);
      constraints.push_back(std::move(row));
    }
  }
  Subspace kernel = nullspace(g.p(), n, constraints);
  if (!kernel.same_space(span))
    throw Error("center of F_pG: class-sum span disagrees with commutation nullspace");
  return span;
}

uint64_t SampleStream::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

AlgebraElement random_normalized_unit(const PGroup& g, Seed seed) {
  SampleStream rng(seed);
  return random_normalized_unit(g, rng);
}

AlgebraElement random_normalized_unit(const PGroup& g, SampleStream& rng) {
  AlgebraElement x(g);
  for (ElementId e = 0; e < g.order(); ++e) x.set_coeff(e, rng.next_mod(g.p()));
  int aug = augmentation(x);
  x.set_coeff(kIdentity, x.coeff(kIdentity) + 1 - aug);
  return x;
}

AlgebraElement random_central_unit(const PGroup& g, Seed seed) {
  SampleStream rng(seed);
  AlgebraElement x(g);
  for (const auto& cls : g.conjugacy_partition().classes) {
    int v = rng.next_mod(g.p());
    for (ElementId e : cls) x.set_coeff(e, v);
  }
  int aug = augmentation(x);
  x.set_coeff(kIdentity, x.coeff(kIdentity) + 1 - aug);
  return x;
}

int unit_power_sums(Prime p, int r) {
  p.require_odd("unit_power_sums");
  if (r < 1 || r > p.value() - 1) throw PreconditionError("exponent r must lie in [1, p-1]");
  int q = p.value();
  int acc = 0;
  for (int gamma = 1; gamma < q; ++gamma) {
    int term = 1;
    for (int e = 0; e < r; ++e) term = (term * gamma) % q;
    acc = (acc + term) % q;
  }
  return acc;
}

int binomial_over_p(int p, int r) {
  if (r < 1 || r > p - 1) throw PreconditionError("binomial_over_p needs 0 < r < p");
  // C(p, r) as an exact 64-bit integer (p <= 13 in practice); the division
  // by p is exact because p | C(p, r) for 0 < r < p.
  unsigned long long num = 1;
  for (int i = 0; i < r; ++i) {
    num *= static_cast<unsigned long long>(p - i);
    num /= static_cast<unsigned long long>(i + 1);  // exact: running product of binomials
  }
  if (num % static_cast<unsigned long long>(p) != 0) throw Error("p does not divide C(p, r)");
  return static_cast<int>((num / static_cast<unsigned long long>(p)) % static_cast<unsigned long long>(p));
}

}  // namespace unitlab
