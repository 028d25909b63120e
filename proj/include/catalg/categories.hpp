#pragma once

// Fully materialized finite categories EO_n, EF_n, EC_n and the skeleton
// SEO_n (objects the initial segments [0], [1], ..., [n]).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "catalg/maps.hpp"

namespace catalg {

enum class CategoryKind { EO, EF, EC, SEO };

std::string to_string(CategoryKind k);
/// The monoid family whose predicates a category's morphisms satisfy.
Family family_of(CategoryKind k);
/// po -> SEO, pf -> EF, pc -> EC: the skeletal category used for quiver,
/// Cartan matrix and presentation of each monoid algebra.
CategoryKind skeletal_kind(Family f);

struct Limits {
  int max_n = 8;
  std::size_t max_paths = 20'000'000;
};

class FiniteCategory {
 public:
  CategoryKind kind() const { return kind_; }
  int n() const { return n_; }

  const std::vector<SubsetOfN>& objects() const { return objects_; }
  std::size_t object_count() const { return objects_.size(); }
  std::optional<std::size_t> object_index(const SubsetOfN& s) const;

  std::size_t morphism_count() const { return morphisms_.size(); }
  const Morphism& morphism(std::size_t id) const { return morphisms_[id]; }
  std::size_t source(std::size_t id) const { return source_[id]; }
  std::size_t target(std::size_t id) const { return target_[id]; }

  /// Morphism ids of Hom(src, tgt), a contiguous range.
  std::size_t hom_begin(std::size_t src, std::size_t tgt) const {
    return offsets_[src * objects_.size() + tgt];
  }
  std::size_t hom_end(std::size_t src, std::size_t tgt) const {
    return offsets_[src * objects_.size() + tgt + 1];
  }
  std::size_t hom_size(std::size_t src, std::size_t tgt) const {
    return hom_end(src, tgt) - hom_begin(src, tgt);
  }
  std::span<const Morphism> hom(std::size_t src, std::size_t tgt) const {
    return {morphisms_.data() + hom_begin(src, tgt), hom_size(src, tgt)};
  }

  std::optional<std::size_t> find(const Morphism& m) const;
  std::size_t identity(std::size_t object) const;
  /// Id of g∘f; throws EndpointMismatch, or std::logic_error if the
  /// composite is missing (category not closed).
  std::size_t compose(std::size_t g, std::size_t f) const;

 private:
  friend FiniteCategory make_category(CategoryKind, int, std::vector<SubsetOfN>);

  CategoryKind kind_ = CategoryKind::EO;
  int n_ = 0;
  std::vector<SubsetOfN> objects_;
  std::unordered_map<std::uint32_t, std::size_t> object_by_mask_;
  std::vector<Morphism> morphisms_;
  std::vector<std::size_t> source_;
  std::vector<std::size_t> target_;
  std::vector<std::size_t> offsets_;
  std::unordered_map<Morphism, std::size_t, MorphismHash> index_;
};

/// EO_n, EF_n or EC_n with all 2^n objects. Throws ResourceLimit if
/// n > limits.max_n, std::invalid_argument for SEO (use build_skeleton_seo).
FiniteCategory build_category(CategoryKind kind, int n, const Limits& limits = {});

/// SEO_n: objects [0..n], hom-sets all onto order-preserving maps.
FiniteCategory build_skeleton_seo(int n, const Limits& limits = {});

/// Dispatches to build_category or build_skeleton_seo.
FiniteCategory build(CategoryKind kind, int n, const Limits& limits = {});

/// a <= b iff Hom(a, b) is nonempty.
struct ObjectOrder {
  std::size_t size = 0;
  std::vector<bool> leq;  // row-major
  bool operator()(std::size_t a, std::size_t b) const { return leq[a * size + b]; }
};

ObjectOrder object_order(const FiniteCategory& cat);

struct StructureReport {
  bool locally_trivial = false;
  bool skeletal = false;
  bool composition_closed = false;
  bool identities_present = false;
  ObjectOrder order;
  bool reflexive = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool partial_order() const { return reflexive && antisymmetric && transitive; }
  /// Human-readable notes on each failed property.
  std::vector<std::string> failures;
};

StructureReport check_structure(const FiniteCategory& cat);

/// True iff some morphism in Hom(tgt, src) is a two-sided inverse.
bool is_isomorphism(const FiniteCategory& cat, std::size_t id);

}  // namespace catalg
