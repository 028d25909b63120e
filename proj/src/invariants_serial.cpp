#include <stdexcept>

#include "catalg/invariants.hpp"

namespace catalg::serial {

namespace {

class DepthMemo {
 public:
  explicit DepthMemo(const FiniteCategory& cat)
      : cat_(cat), iso_(isomorphism_flags(cat)), depth_(cat.morphism_count(), kUnknown) {}

  int depth(std::size_t m) {
    if (depth_[m] == kInProgress) throw std::logic_error("cyclic factorization: category not locally trivial");
    if (depth_[m] != kUnknown) return depth_[m];
    if (iso_[m]) return depth_[m] = 0;
    depth_[m] = kInProgress;
    int best = 1;
    const auto& mor = cat_.morphism(m);
    const std::size_t src = cat_.source(m);
    for (std::size_t mid = 0; mid < cat_.object_count(); ++mid) {
      for (std::size_t f = cat_.hom_begin(src, mid); f < cat_.hom_end(src, mid); ++f) {
        if (iso_[f]) continue;
        auto g = factor_through(mor, cat_.morphism(f));
        if (!g) continue;
        auto gid = cat_.find(*g);
        if (!gid || iso_[*gid]) continue;
        best = std::max(best, 1 + depth(*gid));
      }
    }
    return depth_[m] = best;
  }

  std::vector<int> take() && { return std::move(depth_); }

 private:
  static constexpr int kUnknown = -1;
  static constexpr int kInProgress = -2;
  const FiniteCategory& cat_;
  std::vector<bool> iso_;
  std::vector<int> depth_;
};

}  // namespace

DepthTable composition_depth(const FiniteCategory& cat) {
  DepthMemo memo(cat);
  for (std::size_t m = 0; m < cat.morphism_count(); ++m) memo.depth(m);
  return DepthTable{std::move(memo).take()};
}

}  // namespace catalg::serial
