#include "catalg/categories.hpp"

#include <stdexcept>

#include "catalg/errors.hpp"

namespace catalg {

std::string to_string(CategoryKind k) {
  switch (k) {
    case CategoryKind::EO: return "EO";
    case CategoryKind::EF: return "EF";
    case CategoryKind::EC: return "EC";
    case CategoryKind::SEO: return "SEO";
  }
  return "?";
}

Family family_of(CategoryKind k) {
  switch (k) {
    case CategoryKind::EO:
    case CategoryKind::SEO: return Family::PO;
    case CategoryKind::EF: return Family::PF;
    case CategoryKind::EC: return Family::PC;
  }
  return Family::PO;
}

CategoryKind skeletal_kind(Family f) {
  switch (f) {
    case Family::PO: return CategoryKind::SEO;
    case Family::PF: return CategoryKind::EF;
    case Family::PC: return CategoryKind::EC;
  }
  return CategoryKind::SEO;
}

std::optional<std::size_t> FiniteCategory::object_index(const SubsetOfN& s) const {
  if (s.n() != n_) return std::nullopt;
  auto it = object_by_mask_.find(s.mask());
  if (it == object_by_mask_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FiniteCategory::find(const Morphism& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteCategory::identity(std::size_t object) const {
  auto id = find(Morphism::identity(objects_[object]));
  if (!id) throw std::logic_error("identity missing at " + objects_[object].to_string());
  return *id;
}

std::size_t FiniteCategory::compose(std::size_t g, std::size_t f) const {
  auto id = find(catalg::compose(morphisms_[g], morphisms_[f]));
  if (!id) throw std::logic_error("composite missing from category");
  return *id;
}

FiniteCategory make_category(CategoryKind kind, int n, std::vector<SubsetOfN> objects) {
  FiniteCategory cat;
  cat.kind_ = kind;
  cat.n_ = n;
  cat.objects_ = std::move(objects);
  const std::size_t count = cat.objects_.size();
  for (std::size_t i = 0; i < count; ++i) cat.object_by_mask_[cat.objects_[i].mask()] = i;

  const Family family = family_of(kind);
  std::vector<std::vector<Morphism>> homs(count * count);
  const auto pairs = static_cast<std::ptrdiff_t>(count * count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t p = 0; p < pairs; ++p) {
    const auto src = static_cast<std::size_t>(p) / count;
    const auto tgt = static_cast<std::size_t>(p) % count;
    homs[static_cast<std::size_t>(p)] = enumerate_hom(family, cat.objects_[src], cat.objects_[tgt]);
  }

  cat.offsets_.assign(count * count + 1, 0);
  for (std::size_t p = 0; p < count * count; ++p) {
    cat.offsets_[p] = cat.morphisms_.size();
    for (auto& m : homs[p]) {
      cat.source_.push_back(p / count);
      cat.target_.push_back(p % count);
      cat.morphisms_.push_back(std::move(m));
    }
  }
  cat.offsets_[count * count] = cat.morphisms_.size();
  cat.index_.reserve(cat.morphisms_.size());
  for (std::size_t id = 0; id < cat.morphisms_.size(); ++id) cat.index_.emplace(cat.morphisms_[id], id);
  return cat;
}

namespace {

void check_cap(int n, const Limits& limits) {
  if (n < 0) throw std::invalid_argument("negative ambient size");
  if (n > limits.max_n) {
    throw ResourceLimit("n = " + std::to_string(n) + " exceeds cap " + std::to_string(limits.max_n));
  }
}

// Every composable pair must land back in the category.
bool closed_under_composition(const FiniteCategory& cat) {
  const std::size_t count = cat.object_count();
  bool closed = true;
  const auto mids = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic) reduction(&& : closed)
  for (std::ptrdiff_t c = 0; c < mids; ++c) {
    const auto mid = static_cast<std::size_t>(c);
    for (std::size_t a = 0; a < count && closed; ++a) {
      for (std::size_t f = cat.hom_begin(a, mid); f < cat.hom_end(a, mid) && closed; ++f) {
        for (std::size_t b = 0; b < count && closed; ++b) {
          for (std::size_t g = cat.hom_begin(mid, b); g < cat.hom_end(mid, b); ++g) {
            if (!cat.find(compose(cat.morphism(g), cat.morphism(f)))) {
              closed = false;
              break;
            }
          }
        }
      }
    }
  }
  return closed;
}

}  // namespace

FiniteCategory build_category(CategoryKind kind, int n, const Limits& limits) {
  if (kind == CategoryKind::SEO) throw std::invalid_argument("use build_skeleton_seo for SEO");
  check_cap(n, limits);
  FiniteCategory cat = make_category(kind, n, all_subsets(n));
  if (!closed_under_composition(cat)) {
    throw std::logic_error(to_string(kind) + " is not closed under composition");
  }
  return cat;
}

FiniteCategory build_skeleton_seo(int n, const Limits& limits) {
  check_cap(n, limits);
  std::vector<SubsetOfN> objects;
  for (int k = 0; k <= n; ++k) objects.push_back(SubsetOfN::initial(n, k));
  FiniteCategory cat = make_category(CategoryKind::SEO, n, std::move(objects));
  if (!closed_under_composition(cat)) throw std::logic_error("SEO is not closed under composition");
  return cat;
}

FiniteCategory build(CategoryKind kind, int n, const Limits& limits) {
  return kind == CategoryKind::SEO ? build_skeleton_seo(n, limits) : build_category(kind, n, limits);
}

ObjectOrder object_order(const FiniteCategory& cat) {
  ObjectOrder order;
  order.size = cat.object_count();
  order.leq.assign(order.size * order.size, false);
  for (std::size_t a = 0; a < order.size; ++a) {
    for (std::size_t b = 0; b < order.size; ++b) order.leq[a * order.size + b] = cat.hom_size(a, b) > 0;
  }
  return order;
}

bool is_isomorphism(const FiniteCategory& cat, std::size_t id) {
  const std::size_t src = cat.source(id);
  const std::size_t tgt = cat.target(id);
  const auto& f = cat.morphism(id);
  for (const auto& g : cat.hom(tgt, src)) {
    if (compose(g, f).is_identity() && compose(f, g).is_identity()) return true;
  }
  return false;
}

StructureReport check_structure(const FiniteCategory& cat) {
  StructureReport r;
  const std::size_t count = cat.object_count();

  r.identities_present = true;
  r.locally_trivial = true;
  for (std::size_t a = 0; a < count; ++a) {
    const auto endo = cat.hom(a, a);
    const bool has_id = cat.find(Morphism::identity(cat.objects()[a])).has_value();
    if (!has_id) {
      r.identities_present = false;
      r.failures.push_back("no identity at " + cat.objects()[a].to_string());
    }
    if (endo.size() != 1 || !endo[0].is_identity()) {
      r.locally_trivial = false;
      r.failures.push_back("nontrivial endomorphisms at " + cat.objects()[a].to_string());
    }
  }

  r.composition_closed = closed_under_composition(cat);
  if (!r.composition_closed) r.failures.push_back("not closed under composition");

  r.skeletal = true;
  for (std::size_t a = 0; a < count && r.skeletal; ++a) {
    for (std::size_t b = a + 1; b < count && r.skeletal; ++b) {
      for (std::size_t f = cat.hom_begin(a, b); f < cat.hom_end(a, b); ++f) {
        if (is_isomorphism(cat, f)) {
          r.skeletal = false;
          r.failures.push_back(cat.objects()[a].to_string() + " is isomorphic to " +
                               cat.objects()[b].to_string());
          break;
        }
      }
    }
  }

  r.order = object_order(cat);
  r.reflexive = true;
  r.antisymmetric = true;
  r.transitive = true;
  for (std::size_t a = 0; a < count; ++a) {
    if (!r.order(a, a)) r.reflexive = false;
    for (std::size_t b = 0; b < count; ++b) {
      if (a != b && r.order(a, b) && r.order(b, a)) r.antisymmetric = false;
      if (!r.order(a, b)) continue;
      for (std::size_t c = 0; c < count; ++c) {
        if (r.order(b, c) && !r.order(a, c)) r.transitive = false;
      }
    }
  }
  if (!r.reflexive) r.failures.push_back("object relation is not reflexive");
  if (!r.antisymmetric) r.failures.push_back("object relation is not antisymmetric");
  if (!r.transitive) r.failures.push_back("object relation is not transitive");
  return r;
}

}  // namespace catalg
