#pragma once

// Onto order-preserving maps between [1..n+1] versus strict order-preserving
// maps: the contravariant "least preimage" functor into maps that fix 1, and
// the shift that identifies those with arbitrary strict maps on [0..n].

#include <cstddef>
#include <string>
#include <vector>

#include "catalg/categories.hpp"
#include "catalg/maps.hpp"

namespace catalg {

/// A map [from] -> [to] given by values[i-1] = image of i. [0] is the
/// empty set.
struct StrictMap {
  int from = 0;
  int to = 0;
  std::vector<int> values;

  static StrictMap identity(int k);
  /// Values in [1, to] and strictly increasing.
  bool is_strict() const;
  bool fixes_one() const { return from == 0 || values.front() == 1; }
  int operator()(int i) const { return values[static_cast<std::size_t>(i - 1)]; }
  std::string to_string() const;
  friend bool operator==(const StrictMap&, const StrictMap&) = default;
  friend auto operator<=>(const StrictMap&, const StrictMap&) = default;
};

/// g∘f; throws EndpointMismatch unless f.to == g.from.
StrictMap compose(const StrictMap& g, const StrictMap& f);

/// All strict order-preserving maps [r] -> [k] in lexicographic order.
std::vector<StrictMap> strict_maps(int r, int k);

/// For onto order-preserving f: [r] -> [k] between initial segments, the
/// map [k] -> [r] sending i to min f^{-1}(i).
StrictMap least_preimage(const Morphism& f);

/// Inverse of least_preimage: for strict g: [k] -> [r] with g(1) = 1, the
/// onto map [r] -> [k] sending j to the largest i with g(i) <= j, as a
/// morphism between initial segments of [ambient].
Morphism largest_below(const StrictMap& g, int ambient);

/// g: [r] -> [k] becomes [r+1] -> [k+1] fixing 1 and shifting the rest up.
StrictMap shift_up(const StrictMap& g);
/// Inverse of shift_up on maps fixing 1.
StrictMap shift_down(const StrictMap& g);

/// Both isomorphisms materialized as index tables.
struct FunctorPair {
  int n = 0;
  FiniteCategory onto;                  // skeleton on [0..n+1]; [0] is skipped
  std::vector<std::size_t> onto_ids;    // morphisms of the punctured skeleton
  std::vector<StrictMap> fixing;        // strict maps fixing 1 on [1..n+1]
  std::vector<StrictMap> strict;        // strict maps on [0..n]
  std::vector<std::size_t> g_table;          // onto_ids index -> fixing index
  std::vector<std::size_t> g_inverse_table;  // fixing index -> onto_ids index
  std::vector<std::size_t> f_table;          // strict index -> fixing index
  std::vector<std::size_t> f_inverse_table;  // fixing index -> strict index
};

/// Throws ResourceLimit if n + 1 exceeds limits.max_n.
FunctorPair delta_iso(int n, const Limits& limits = {});

struct FunctorCheck {
  bool g_round_trip = false;        // inverse after forward is the identity, both ways
  bool g_preserves_identities = false;
  bool g_reverses_composition = false;  // image of f2∘f1 = image(f1)∘image(f2)
  bool f_round_trip = false;
  bool f_preserves_composition = false;
  bool ok() const {
    return g_round_trip && g_preserves_identities && g_reverses_composition && f_round_trip &&
           f_preserves_composition;
  }
};

/// Exhaustive functor-law check over every composable pair.
FunctorCheck check_functor_pair(const FunctorPair& fp);

}  // namespace catalg
