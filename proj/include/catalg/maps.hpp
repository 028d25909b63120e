#pragma once

// Subsets of [n] = {1..n} and onto maps between them.
//
// Every category in this library has subsets of [n] as objects and onto
// maps A -> B as morphisms, filtered by an order predicate. Elements are
// 1-based throughout; a subset is stored as a bitmask (bit e-1 set iff e is
// an element) together with its ambient n.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace catalg {

/// Hard ceiling on the ambient size; the configurable caps sit below this.
inline constexpr int kMaxAmbient = 16;

class SubsetOfN {
 public:
  SubsetOfN() = default;

  /// Throws std::invalid_argument unless elements are strictly increasing
  /// and inside [1, n].
  SubsetOfN(int n, std::span<const int> elements);
  SubsetOfN(int n, std::initializer_list<int> elements)
      : SubsetOfN(n, std::span<const int>(elements.begin(), elements.size())) {}

  static SubsetOfN from_mask(int n, std::uint32_t mask);
  /// {1..k} inside [n].
  static SubsetOfN initial(int n, int k);
  static SubsetOfN full(int n) { return initial(n, n); }
  static SubsetOfN empty(int n) { return from_mask(n, 0); }

  int n() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(int e) const {
    return e >= 1 && e <= n_ && ((mask_ >> (e - 1)) & 1U) != 0;
  }
  std::vector<int> elements() const;
  /// Sum of the elements.
  int element_sum() const;

  SubsetOfN with(int e) const;
  SubsetOfN without(int e) const;
  bool is_subset_of(const SubsetOfN& other) const {
    return n_ == other.n_ && (mask_ & ~other.mask_) == 0;
  }

  /// "{1,3}" style; the empty subset prints as "{}".
  std::string to_string() const;

  friend bool operator==(const SubsetOfN&, const SubsetOfN&) = default;

 private:
  int n_ = 0;
  std::uint32_t mask_ = 0;
};

/// Cardinality ascending, then lexicographic on the sorted element lists.
/// This is the object order used for every matrix the library emits.
bool canonical_less(const SubsetOfN& a, const SubsetOfN& b);

/// All subsets of [n] in canonical order.
std::vector<SubsetOfN> all_subsets(int n);

/// An onto map dom -> cod. Immutable once constructed.
class Morphism {
 public:
  /// values[k] is the image of the k-th smallest element of dom. Throws
  /// std::invalid_argument if the table is not a total onto map into cod.
  Morphism(SubsetOfN dom, SubsetOfN cod, std::span<const int> values);
  Morphism(SubsetOfN dom, SubsetOfN cod, std::initializer_list<int> values)
      : Morphism(dom, cod, std::span<const int>(values.begin(), values.size())) {}

  static Morphism identity(const SubsetOfN& a);

  int n() const { return dom_.n(); }
  const SubsetOfN& dom() const { return dom_; }
  const SubsetOfN& cod() const { return cod_; }

  /// Image of x; x must be in dom.
  int operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }
  /// Value table in domain order.
  std::vector<int> values() const;

  bool is_identity() const;
  bool is_order_preserving() const;
  bool is_order_decreasing() const;

  /// "{1,2,3}->{1,2}:[1,1,2]".
  std::string to_string() const;

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.image_ == b.image_;
  }
  /// Lexicographic on value tables for equal endpoints.
  friend bool value_table_less(const Morphism& a, const Morphism& b);

  std::size_t hash() const;

 private:
  Morphism() = default;
  friend Morphism compose(const Morphism&, const Morphism&);
  friend std::optional<Morphism> factor_through(const Morphism&, const Morphism&);

  SubsetOfN dom_;
  SubsetOfN cod_;
  std::array<std::uint8_t, kMaxAmbient + 1> image_{};
};

bool is_order_preserving(const Morphism& f);
bool is_order_decreasing(const Morphism& f);

/// g after f. Throws EndpointMismatch unless cod(f) == dom(g).
Morphism compose(const Morphism& g, const Morphism& f);

/// The unique g with g∘f == m, if one exists (f onto makes it unique).
/// Requires dom(f) == dom(m); g is only checked to be a well-defined onto
/// map cod(f) -> cod(m), not for membership in any family.
std::optional<Morphism> factor_through(const Morphism& m, const Morphism& f);

/// The monoid families; each fixes the predicates its morphisms satisfy.
enum class Family { PO, PF, PC };

struct MonoidFamily {
  Family tag;
  int n;
};

std::string to_string(Family f);
/// Accepts "po", "pf", "pc" (case-insensitive). Throws std::invalid_argument.
Family parse_family(const std::string& s);
bool satisfies(Family family, const Morphism& f);

/// Onto maps A -> B in the family, lexicographic on value tables.
std::vector<Morphism> enumerate_hom(Family family, const SubsetOfN& a, const SubsetOfN& b);

/// Union of enumerate_hom over all ordered pairs of subsets, in canonical
/// (source, target) order. Throws ResourceLimit if n > max_n.
std::vector<Morphism> enumerate_monoid(const MonoidFamily& family, int max_n = 8);

/// A partial map on [n]: table[x-1] is the image of x, or 0 if undefined.
using PartialMap = std::vector<int>;

/// The onto corestriction of a partial map: domain of definition -> image.
Morphism corestrict(int n, const PartialMap& p);

struct MorphismHash {
  std::size_t operator()(const Morphism& m) const { return m.hash(); }
};

}  // namespace catalg
