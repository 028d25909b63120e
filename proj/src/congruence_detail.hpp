#pragma once

// Internals shared by the parallel and serial congruence closures.

#include <cstddef>
#include <exception>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catalg/presentations.hpp"

namespace catalg::detail {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto a : w) h = (h ^ a) * 1099511628211ULL;
    return h;
  }
};

using WordIndex = std::unordered_map<Word, std::size_t, WordHash>;

/// Directed one-step rewrites (each relation in both directions), indexed
/// by the first arrow of the side being replaced.
struct RewriteRules {
  std::vector<std::pair<Word, Word>> rules;
  std::vector<std::vector<std::size_t>> by_first;
};

RewriteRules make_rules(const PresentationQuiver& q, const std::vector<Relation>& rels);

/// Written-order words of every path starting at `source`, grouped by
/// target vertex. Throws ResourceLimit past `cap` paths.
std::vector<std::vector<Word>> words_from(const PresentationQuiver& q, std::size_t source, std::size_t cap);

/// Calls visit(rewritten) for every word reachable from w by one rewrite.
template <typename Visit>
void for_each_rewrite(const RewriteRules& rr, const Word& w, Visit visit) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t r : rr.by_first[w[pos]]) {
      const auto& [from, to] = rr.rules[r];
      if (pos + from.size() > w.size()) continue;
      if (!std::equal(from.begin(), from.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
      Word out;
      out.reserve(w.size() - from.size() + to.size());
      out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      out.insert(out.end(), to.begin(), to.end());
      out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + from.size()), w.end());
      visit(out);
    }
  }
}

Morphism evaluate_word(const PresentationQuiver& q, std::size_t source, const Word& w);

/// Fills class_value, representative and consistent from class_of.
void finish_classes(const PresentationQuiver& q, HomPairClasses& pc);

/// Runs body(source) for every vertex, keeping per-source results in order;
/// rethrows the first exception raised inside a parallel region.
template <typename Body>
std::vector<std::vector<HomPairClasses>> per_source(std::size_t vertices, bool parallel, Body body) {
  std::vector<std::vector<HomPairClasses>> out(vertices);
  std::exception_ptr error;
  const auto count = static_cast<std::ptrdiff_t>(vertices);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t s = 0; s < count; ++s) {
    try {
      out[static_cast<std::size_t>(s)] = body(static_cast<std::size_t>(s));
    } catch (...) {
#pragma omp critical(catalg_per_source_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace catalg::detail
