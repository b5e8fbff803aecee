#pragma once

// Brute-force oracles used across the test suite. These recompute structure
// straight from the multiplication table, independent of the cached values
// the library exposes.

#include <algorithm>
#include <vector>

#include "unitlab/fp_algebra.hpp"
#include "unitlab/pgroup.hpp"
#include "unitlab/subspace.hpp"

namespace testutil {

using namespace unitlab;

inline std::vector<ElementId> brute_center(const PGroup& g) {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < g.order(); ++a) {
    bool central = true;
    for (ElementId b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

inline int brute_element_order(const PGroup& g, ElementId e) {
  int ord = 1;
  ElementId x = e;
  while (x != kIdentity) {
    x = g.mul(x, e);
    ++ord;
  }
  return ord;
}

inline int brute_exponent(const PGroup& g) {
  int e = 1;
  for (ElementId x = 0; x < g.order(); ++x) e = std::max(e, brute_element_order(g, x));
  return e;
}

// The set of p-th powers (not its closure).
inline std::vector<ElementId> pth_power_set(const PGroup& g, long long e) {
  std::vector<char> seen(g.order(), 0);
  for (ElementId x = 0; x < g.order(); ++x) seen[g.pow(x, e)] = 1;
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

// Conjugacy classes recomputed from scratch; returns sizes sorted ascending.
inline std::vector<int> brute_class_sizes(const PGroup& g) {
  std::vector<int> cls(g.order(), -1);
  std::vector<int> sizes;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (cls[x] >= 0) continue;
    int id = static_cast<int>(sizes.size());
    std::vector<ElementId> work{x};
    cls[x] = id;
    int size = 0;
    while (!work.empty()) {
      ElementId y = work.back();
      work.pop_back();
      ++size;
      for (ElementId h = 0; h < g.order(); ++h) {
        ElementId z = g.conjugate(y, h);
        if (cls[z] < 0) {
          cls[z] = id;
          work.push_back(z);
        }
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Intersection of all maximal subgroups, via Hom(G, Z_p) as the nullspace of
// the additivity constraints f(ab) - f(a) - f(b) = 0. Independent of the
// G^p G' closure route.
inline std::vector<ElementId> frattini_via_maximal_subgroups(const PGroup& g) {
  int n = g.order();
  std::vector<std::vector<uint8_t>> rows;
  rows.reserve(static_cast<size_t>(n) * n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      std::vector<uint8_t> row(n, 0);
      auto bump = [&](ElementId e, int v) {
        row[e] = static_cast<uint8_t>(((row[e] + v) % g.p() + g.p()) % g.p());
      };
      bump(g.mul(a, b), 1);
      bump(a, -1);
      bump(b, -1);
      rows.push_back(std::move(row));
    }
  Subspace homs = nullspace(g.p(), n, rows);
  // Kernel of every nontrivial hom contains exactly the elements where all
  // basis functionals vanish.
  std::vector<ElementId> out;
  for (ElementId e = 0; e < n; ++e) {
    bool in_all = true;
    for (const auto& f : homs.basis()) in_all = in_all && f[e] == 0;
    if (in_all) out.push_back(e);
  }
  return out;
}

inline std::vector<ElementId> random_relabeling(const PGroup& g, uint64_t seed) {
  std::vector<ElementId> pi(g.order());
  for (ElementId i = 0; i < g.order(); ++i) pi[i] = i;
  SampleStream rng(Seed{seed});
  for (int i = g.order() - 1; i >= 2; --i) std::swap(pi[i], pi[1 + rng.next_mod(i)]);
  return pi;
}

}  // namespace testutil
