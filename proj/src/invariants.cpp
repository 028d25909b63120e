#include "catalg/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace catalg {

int DepthTable::max_depth() const {
  return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

std::vector<bool> isomorphism_flags(const FiniteCategory& cat) {
  std::vector<bool> iso(cat.morphism_count());
  for (std::size_t id = 0; id < cat.morphism_count(); ++id) {
    const auto& m = cat.morphism(id);
    // Onto maps can only be invertible between equal-size sets.
    iso[id] = m.dom().size() == m.cod().size() && is_isomorphism(cat, id);
  }
  return iso;
}

namespace {

// All (f, g) with f, g non-isomorphisms and g∘f == m. Since f is onto, g is
// determined by m and f.
std::vector<std::pair<std::size_t, std::size_t>> factorizations(const FiniteCategory& cat,
                                                                const std::vector<bool>& iso,
                                                                std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& mor = cat.morphism(m);
  const std::size_t src = cat.source(m);
  for (std::size_t mid = 0; mid < cat.object_count(); ++mid) {
    for (std::size_t f = cat.hom_begin(src, mid); f < cat.hom_end(src, mid); ++f) {
      if (iso[f]) continue;
      auto g = factor_through(mor, cat.morphism(f));
      if (!g) continue;
      auto gid = cat.find(*g);
      if (gid && !iso[*gid]) out.emplace_back(f, *gid);
    }
  }
  return out;
}

}  // namespace

DepthTable composition_depth(const FiniteCategory& cat) {
  const std::size_t count = cat.morphism_count();
  const auto iso = isomorphism_flags(cat);

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> factors(count);
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t m = 0; m < total; ++m) {
    const auto id = static_cast<std::size_t>(m);
    if (!iso[id]) factors[id] = factorizations(cat, iso, id);
  }

  DepthTable table;
  table.depth.assign(count, 0);
  for (std::size_t id = 0; id < count; ++id) table.depth[id] = iso[id] ? 0 : 1;

  // Jacobi sweeps; each sweep extends every longest chain by at least one
  // factor until nothing changes. Terminates because factorizations form a
  // DAG in a locally trivial category.
  bool changed = true;
  std::vector<int> next(count);
  while (changed) {
    changed = false;
#pragma omp parallel for schedule(dynamic, 16) reduction(|| : changed)
    for (std::ptrdiff_t m = 0; m < total; ++m) {
      const auto id = static_cast<std::size_t>(m);
      int best = table.depth[id];
      for (const auto& [f, g] : factors[id]) best = std::max(best, table.depth[f] + table.depth[g]);
      next[id] = best;
      if (best != table.depth[id]) changed = true;
    }
    table.depth.swap(next);
  }
  return table;
}

BigInt radical_dimension(const DepthTable& depths, int k) {
  BigInt count = 0;
  for (int d : depths.depth) {
    if (d >= k) ++count;
  }
  return count;
}

BigInt radical_dimension(const FiniteCategory& cat, int k) {
  return radical_dimension(composition_depth(cat), k);
}

std::vector<BigInt> radical_dimensions(const DepthTable& depths) {
  std::vector<BigInt> out;
  for (int k = 0;; ++k) {
    out.push_back(radical_dimension(depths, k));
    if (out.back() == 0) break;
  }
  return out;
}

int loewy_length(const DepthTable& depths) { return depths.max_depth() + 1; }

int loewy_length(const FiniteCategory& cat) { return loewy_length(composition_depth(cat)); }

Quiver irreducible_morphisms(const FiniteCategory& cat) {
  const auto iso = isomorphism_flags(cat);
  const std::size_t count = cat.morphism_count();
  std::vector<char> irreducible(count, 0);
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t m = 0; m < total; ++m) {
    const auto id = static_cast<std::size_t>(m);
    if (!iso[id]) irreducible[id] = factorizations(cat, iso, id).empty() ? 1 : 0;
  }
  Quiver q;
  q.vertex_count = cat.object_count();
  for (std::size_t id = 0; id < count; ++id) {
    if (irreducible[id]) q.arrows.push_back({cat.source(id), cat.target(id), id});
  }
  return q;
}

ExactMatrix cartan_matrix(const FiniteCategory& cat) {
  const std::size_t count = cat.object_count();
  ExactMatrix c(count, count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      c(i, j) = static_cast<unsigned long>(cat.hom_size(j, i));
    }
  }
  return c;
}

std::vector<std::vector<std::size_t>> blocks(const FiniteCategory& cat) {
  const std::size_t count = cat.object_count();
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (a != b && cat.hom_size(a, b) > 0) {
        const auto ra = root(a);
        const auto rb = root(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(count, count);
  for (std::size_t a = 0; a < count; ++a) {
    const auto r = root(a);
    if (slot[r] == count) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(a);
  }
  return out;
}

int defect(const Morphism& f) { return f.dom().size() - f.cod().size(); }

}  // namespace catalg
