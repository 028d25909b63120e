#pragma once

// Quiver generators, relation families, paths in the free category over the
// quiver, congruence closure, and the check that (quiver, relations) presents
// the category: on every hom-pair, congruence classes of paths are in
// bijection with morphisms under evaluation.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "catalg/categories.hpp"
#include "catalg/maps.hpp"

namespace catalg {

/// d_i^k : [k+1] -> [k], the onto order-preserving map with f(i) = f(i+1).
struct Simplicial {
  int n;  // ambient size
  int k;
  int i;
  friend bool operator==(const Simplicial&, const Simplicial&) = default;
};

/// d_j^A : A -> A_j, fixes A \ {j} and sends j to j-1.
struct Catalan {
  SubsetOfN domain;
  int j;
  friend bool operator==(const Catalan&, const Catalan&) = default;
};

/// d_{i,j}^A : A -> A_{i,j}, fixes A \ {j} and sends j to i, where every x
/// with i < x <= j lies in A.
struct Decreasing {
  SubsetOfN domain;
  int i;
  int j;
  friend bool operator==(const Decreasing&, const Decreasing&) = default;
};

using GeneratorLabel = std::variant<Simplicial, Catalan, Decreasing>;

bool is_valid(const GeneratorLabel& g);
SubsetOfN source(const GeneratorLabel& g);
SubsetOfN target(const GeneratorLabel& g);
/// The morphism the label names; the label must be valid.
Morphism evaluate(const GeneratorLabel& g);
std::string to_string(const GeneratorLabel& g);

/// i ◁_A j: i < j and every x with i < x <= j is in A.
bool admissible(const SubsetOfN& a, int i, int j);

/// A word in the generators, written as composition: word.front() is
/// applied last, word.back() first. The empty word is the identity.
struct Path {
  SubsetOfN source;
  SubsetOfN target;
  std::vector<GeneratorLabel> word;

  static Path identity(const SubsetOfN& object) { return {object, object, {}}; }
  /// Throws EndpointMismatch if consecutive labels do not compose; the
  /// word must be nonempty.
  static Path from_word(std::vector<GeneratorLabel> word);

  std::size_t length() const { return word.size(); }
  std::string to_string() const;
  friend bool operator==(const Path&, const Path&) = default;
};

Morphism evaluate(const Path& p);

struct Relation {
  std::string family;  // "simplicial", "PC1", "PC2", "PF1" .. "PF6"
  Path left;
  Path right;

  bool well_formed() const { return left.source == right.source && left.target == right.target; }
  bool sound() const { return well_formed() && evaluate(left) == evaluate(right); }
  std::string to_string() const;
};

/// The irreducible morphisms of SEO_n, EC_n or EF_n as labels.
std::vector<GeneratorLabel> generators(CategoryKind kind, int n);

/// The relation families for SEO_n, EC_n or EF_n. Index choices whose
/// leading side is not a word of generators are skipped; instances whose
/// leading side exists but whose other side is malformed or evaluates
/// differently are dropped and described in *rejected.
std::vector<Relation> relations(CategoryKind kind, int n, std::vector<std::string>* rejected = nullptr);

/// Simplicial identities d_i^{k-1} d_j^k = d_{j-1}^{k-1} d_i^k for
/// 2 <= k <= max_level, 1 <= i < j <= k, in ambient size `ambient`.
std::vector<Relation> simplicial_relations(int ambient, int max_level);

/// Keeps only relations whose family is not in `drop`.
std::vector<Relation> without_families(const std::vector<Relation>& rels, const std::vector<std::string>& drop);

/// Generators placed on the objects of a category.
struct PresentationQuiver {
  CategoryKind kind = CategoryKind::SEO;
  int n = 0;
  std::vector<SubsetOfN> vertices;
  std::vector<GeneratorLabel> labels;
  std::vector<Morphism> morphisms;
  std::vector<std::size_t> source;
  std::vector<std::size_t> target;

  std::size_t arrow_count() const { return labels.size(); }
  std::optional<std::size_t> arrow_index(const GeneratorLabel& g) const;
};

PresentationQuiver presentation_quiver(const FiniteCategory& cat);

/// Arrow indices in written (composition) order.
using Word = std::vector<std::uint16_t>;

Path to_path(const PresentationQuiver& q, std::size_t source, const Word& w);

/// All paths source -> target, including the identity path when equal.
/// Throws ResourceLimit past limits.max_paths. Requires every generator to
/// strictly lower a grading so the path set is finite.
std::vector<Path> enumerate_paths(const PresentationQuiver& q, std::size_t source, std::size_t target,
                                  const Limits& limits = {});

struct HomPairClasses {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<Word> paths;
  std::vector<std::size_t> class_of;        // per path
  std::vector<Morphism> class_value;        // per class, evaluation of its first path
  std::vector<std::size_t> representative;  // per class, index of its first path
  bool consistent = true;                   // every path evaluates like its class
  std::size_t class_count() const { return class_value.size(); }
};

struct CongruenceResult {
  std::vector<HomPairClasses> pairs;  // only pairs with at least one path
  const HomPairClasses* find(std::size_t source, std::size_t target) const;
};

/// Least congruence containing the relations, restricted to each hom-pair:
/// union-find over one-step subword rewrites in both directions. Parallel
/// over source vertices.
CongruenceResult congruence_closure(const PresentationQuiver& q, const std::vector<Relation>& rels,
                                    const Limits& limits = {});

struct HomPairCheck {
  std::size_t source;
  std::size_t target;
  std::size_t paths;
  std::size_t classes;
  std::size_t hom_size;
  bool ok;
};

struct Witness {
  std::size_t source;
  std::size_t target;
  std::string reason;
  std::optional<Path> first;
  std::optional<Path> second;
  std::optional<Morphism> value;
};

struct VerificationReport {
  bool passed = false;
  bool quiver_matches = false;
  bool relations_sound = false;
  std::size_t generator_count = 0;
  std::size_t relation_count = 0;
  std::vector<std::string> failures;
  std::vector<HomPairCheck> hom_pairs;  // every ordered pair of objects
  std::optional<Witness> witness;
};

VerificationReport verify_presentation(const FiniteCategory& cat, const PresentationQuiver& q,
                                       const std::vector<Relation>& rels, const Limits& limits = {});

/// A path of generators evaluating to f, splitting off the rightmost
/// generator at the least moved element (EC, EF) or the least collapsed
/// pair (SEO). Identities give the empty path.
Path factorize(const FiniteCategory& cat, const Morphism& f);

namespace serial {

/// Reference closure: explores each class by breadth-first rewriting.
CongruenceResult congruence_closure(const PresentationQuiver& q, const std::vector<Relation>& rels,
                                    const Limits& limits = {});

}  // namespace serial

}  // namespace catalg
