#pragma once

// Invariants of the algebra of a finite locally trivial category, all read
// off the category itself: radical layers from composition depth, quiver
// from irreducible morphisms, Cartan matrix from hom-set sizes, blocks from
// connected components.

#include <cstddef>
#include <vector>

#include "catalg/categories.hpp"
#include "catalg/exact_matrix.hpp"

namespace catalg {

/// depth[id] = the largest k such that the morphism is a composite of k
/// non-isomorphisms (isomorphisms, identities included, have depth 0).
/// The k-th radical power is spanned by the morphisms of depth >= k.
struct DepthTable {
  std::vector<int> depth;
  int max_depth() const;
};

/// Longest-factorization fixpoint, parallel over morphisms per sweep.
DepthTable composition_depth(const FiniteCategory& cat);

/// dim Rad^k: number of morphisms with depth >= k (k = 0 gives all).
BigInt radical_dimension(const FiniteCategory& cat, int k);
BigInt radical_dimension(const DepthTable& depths, int k);

/// All radical dimensions from k = 0 up to and including the first zero.
std::vector<BigInt> radical_dimensions(const DepthTable& depths);

/// 1 + maximum depth; the smallest k with Rad^k = 0.
int loewy_length(const FiniteCategory& cat);
int loewy_length(const DepthTable& depths);

struct Arrow {
  std::size_t source;
  std::size_t target;
  std::size_t morphism;
};

struct Quiver {
  std::size_t vertex_count = 0;
  std::vector<Arrow> arrows;  // ordered by morphism id
};

/// Arrows are the non-isomorphisms admitting no factorization into two
/// non-isomorphisms.
Quiver irreducible_morphisms(const FiniteCategory& cat);

/// Entry (i, j) = |Hom(object_j, object_i)|: row is target, column source.
ExactMatrix cartan_matrix(const FiniteCategory& cat);

/// Connected components of the underlying undirected graph, each a sorted
/// list of object indices; components ordered by smallest member.
std::vector<std::vector<std::size_t>> blocks(const FiniteCategory& cat);

/// |dom f| - |cod f|.
int defect(const Morphism& f);

/// Per-morphism isomorphism flags.
std::vector<bool> isomorphism_flags(const FiniteCategory& cat);

namespace serial {

/// Reference depth: memoized recursion depth(m) = 1 + max depth(g) over
/// m = g∘f with f, g non-isomorphisms. Independent of the parallel sweep.
DepthTable composition_depth(const FiniteCategory& cat);

}  // namespace serial

}  // namespace catalg
