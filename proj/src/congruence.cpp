#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "catalg/errors.hpp"
#include "catalg/invariants.hpp"
#include "congruence_detail.hpp"

namespace catalg {

namespace detail {

RewriteRules make_rules(const PresentationQuiver& q, const std::vector<Relation>& rels) {
  auto to_word = [&](const Path& p) {
    Word w;
    for (const auto& g : p.word) {
      auto idx = q.arrow_index(g);
      if (!idx) throw std::invalid_argument("relation uses a label outside the quiver: " + to_string(g));
      w.push_back(static_cast<std::uint16_t>(*idx));
    }
    return w;
  };
  RewriteRules rr;
  rr.by_first.resize(q.arrow_count());
  for (const auto& rel : rels) {
    if (!rel.well_formed()) throw std::invalid_argument("relation sides have different endpoints: " + rel.to_string());
    Word l = to_word(rel.left);
    Word r = to_word(rel.right);
    if (l.empty() || r.empty()) throw std::invalid_argument("relation sides must be nonempty words");
    rr.rules.emplace_back(l, r);
    rr.rules.emplace_back(r, l);
  }
  for (std::size_t k = 0; k < rr.rules.size(); ++k) rr.by_first[rr.rules[k].first.front()].push_back(k);
  return rr;
}

std::vector<std::vector<Word>> words_from(const PresentationQuiver& q, std::size_t source, std::size_t cap) {
  std::vector<std::vector<std::uint16_t>> out_arrows(q.vertices.size());
  for (std::size_t a = 0; a < q.arrow_count(); ++a) out_arrows[q.source[a]].push_back(static_cast<std::uint16_t>(a));

  std::vector<std::vector<Word>> groups(q.vertices.size());
  std::size_t total = 0;
  Word applied;  // application order
  auto visit = [&](auto&& self, std::size_t vertex) -> void {
    if (++total > cap) throw ResourceLimit("path enumeration exceeded " + std::to_string(cap) + " paths");
    groups[vertex].emplace_back(applied.rbegin(), applied.rend());
    for (auto a : out_arrows[vertex]) {
      applied.push_back(a);
      self(self, q.target[a]);
      applied.pop_back();
    }
  };
  visit(visit, source);
  return groups;
}

Morphism evaluate_word(const PresentationQuiver& q, std::size_t source, const Word& w) {
  Morphism acc = Morphism::identity(q.vertices[source]);
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = compose(q.morphisms[*it], acc);
  return acc;
}

void finish_classes(const PresentationQuiver& q, HomPairClasses& pc) {
  std::size_t classes = 0;
  for (auto c : pc.class_of) classes = std::max(classes, c + 1);
  pc.representative.assign(classes, pc.paths.size());
  pc.class_value.clear();
  std::vector<std::optional<Morphism>> values(classes);
  pc.consistent = true;
  for (std::size_t p = 0; p < pc.paths.size(); ++p) {
    const auto c = pc.class_of[p];
    Morphism v = evaluate_word(q, pc.source, pc.paths[p]);
    if (!values[c]) {
      values[c] = v;
      pc.representative[c] = p;
    } else if (!(*values[c] == v)) {
      pc.consistent = false;
    }
  }
  for (auto& v : values) pc.class_value.push_back(*v);
}

}  // namespace detail

const HomPairClasses* CongruenceResult::find(std::size_t source, std::size_t target) const {
  for (const auto& p : pairs) {
    if (p.source == source && p.target == target) return &p;
  }
  return nullptr;
}

std::vector<Path> enumerate_paths(const PresentationQuiver& q, std::size_t source, std::size_t target,
                                  const Limits& limits) {
  auto groups = detail::words_from(q, source, limits.max_paths);
  std::vector<Path> out;
  for (const auto& w : groups[target]) out.push_back(to_path(q, source, w));
  return out;
}

namespace {

HomPairClasses close_pair(const PresentationQuiver& q, const detail::RewriteRules& rr, std::size_t s, std::size_t t,
                          std::vector<Word> paths) {
  HomPairClasses pc;
  pc.source = s;
  pc.target = t;
  pc.paths = std::move(paths);
  const std::size_t count = pc.paths.size();

  detail::WordIndex index;
  index.reserve(count);
  for (std::size_t p = 0; p < count; ++p) index.emplace(pc.paths[p], p);

  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t p = 0; p < count; ++p) {
    detail::for_each_rewrite(rr, pc.paths[p], [&](const Word& other) {
      auto it = index.find(other);
      if (it == index.end()) throw std::logic_error("rewrite left the enumerated path set");
      const auto a = root(p);
      const auto b = root(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    });
  }

  // Number classes by first appearance.
  std::vector<std::size_t> label(count, count);
  pc.class_of.resize(count);
  std::size_t next = 0;
  for (std::size_t p = 0; p < count; ++p) {
    const auto r = root(p);
    if (label[r] == count) label[r] = next++;
    pc.class_of[p] = label[r];
  }
  detail::finish_classes(q, pc);
  return pc;
}

}  // namespace

CongruenceResult congruence_closure(const PresentationQuiver& q, const std::vector<Relation>& rels,
                                    const Limits& limits) {
  const auto rr = detail::make_rules(q, rels);
  auto per = detail::per_source(q.vertices.size(), true, [&](std::size_t s) {
    auto groups = detail::words_from(q, s, limits.max_paths);
    std::vector<HomPairClasses> out;
    for (std::size_t t = 0; t < groups.size(); ++t) {
      if (!groups[t].empty()) out.push_back(close_pair(q, rr, s, t, std::move(groups[t])));
    }
    return out;
  });
  CongruenceResult result;
  for (auto& v : per) {
    for (auto& pc : v) result.pairs.push_back(std::move(pc));
  }
  return result;
}

VerificationReport verify_presentation(const FiniteCategory& cat, const PresentationQuiver& q,
                                       const std::vector<Relation>& rels, const Limits& limits) {
  VerificationReport report;
  report.generator_count = q.arrow_count();
  report.relation_count = rels.size();

  {
    const auto quiver = irreducible_morphisms(cat);
    std::vector<std::size_t> expected;
    for (const auto& a : quiver.arrows) expected.push_back(a.morphism);
    std::vector<std::size_t> given;
    bool all_found = true;
    for (const auto& m : q.morphisms) {
      auto id = cat.find(m);
      if (id) {
        given.push_back(*id);
      } else {
        all_found = false;
      }
    }
    std::sort(expected.begin(), expected.end());
    std::sort(given.begin(), given.end());
    report.quiver_matches = all_found && expected == given;
    if (!report.quiver_matches) report.failures.push_back("generators are not exactly the irreducible morphisms");
  }

  report.relations_sound = true;
  for (const auto& r : rels) {
    if (!r.sound()) {
      report.relations_sound = false;
      report.failures.push_back("unsound relation " + r.to_string());
    }
  }

  const auto closure = congruence_closure(q, rels, limits);
  const std::size_t objects = cat.object_count();
  bool all_ok = true;
  for (std::size_t s = 0; s < objects; ++s) {
    for (std::size_t t = 0; t < objects; ++t) {
      const auto* pc = closure.find(s, t);
      HomPairCheck check{s, t, pc ? pc->paths.size() : 0, pc ? pc->class_count() : 0, cat.hom_size(s, t), true};
      std::optional<Witness> w;
      if (pc) {
        if (!pc->consistent) {
          check.ok = false;
          w = Witness{s, t, "paths in one class evaluate differently", std::nullopt, std::nullopt, std::nullopt};
        }
        for (std::size_t a = 0; a < pc->class_count() && !w; ++a) {
          for (std::size_t b = a + 1; b < pc->class_count(); ++b) {
            if (pc->class_value[a] == pc->class_value[b]) {
              check.ok = false;
              w = Witness{s,
                          t,
                          "inequivalent paths evaluate to the same morphism",
                          to_path(q, s, pc->paths[pc->representative[a]]),
                          to_path(q, s, pc->paths[pc->representative[b]]),
                          pc->class_value[a]};
              break;
            }
          }
        }
      }
      if (check.ok && check.classes != check.hom_size) {
        check.ok = false;
        std::optional<Morphism> missing;
        for (const auto& m : cat.hom(s, t)) {
          bool hit = false;
          if (pc) {
            for (const auto& v : pc->class_value) hit = hit || v == m;
          }
          if (!hit) {
            missing = m;
            break;
          }
        }
        w = Witness{s, t, "morphism not represented by any path", std::nullopt, std::nullopt, missing};
      }
      if (!check.ok) {
        all_ok = false;
        if (!report.witness) report.witness = w;
      }
      report.hom_pairs.push_back(check);
    }
  }
  if (!all_ok) report.failures.push_back("class count differs from hom-set size on some hom-pair");
  report.passed = report.quiver_matches && report.relations_sound && all_ok;
  return report;
}

namespace serial {

CongruenceResult congruence_closure(const PresentationQuiver& q, const std::vector<Relation>& rels,
                                    const Limits& limits) {
  const auto rr = detail::make_rules(q, rels);
  CongruenceResult result;
  for (std::size_t s = 0; s < q.vertices.size(); ++s) {
    auto groups = detail::words_from(q, s, limits.max_paths);
    for (std::size_t t = 0; t < groups.size(); ++t) {
      if (groups[t].empty()) continue;
      HomPairClasses pc;
      pc.source = s;
      pc.target = t;
      pc.paths = std::move(groups[t]);
      const std::size_t count = pc.paths.size();
      detail::WordIndex index;
      for (std::size_t p = 0; p < count; ++p) index.emplace(pc.paths[p], p);

      constexpr std::size_t unset = static_cast<std::size_t>(-1);
      pc.class_of.assign(count, unset);
      std::size_t next = 0;
      std::vector<std::size_t> queue;
      for (std::size_t start = 0; start < count; ++start) {
        if (pc.class_of[start] != unset) continue;
        const std::size_t cls = next++;
        pc.class_of[start] = cls;
        queue.assign(1, start);
        while (!queue.empty()) {
          const auto p = queue.back();
          queue.pop_back();
          detail::for_each_rewrite(rr, pc.paths[p], [&](const Word& other) {
            auto it = index.find(other);
            if (it == index.end()) throw std::logic_error("rewrite left the enumerated path set");
            if (pc.class_of[it->second] == unset) {
              pc.class_of[it->second] = cls;
              queue.push_back(it->second);
            }
          });
        }
      }
      detail::finish_classes(q, pc);
      result.pairs.push_back(std::move(pc));
    }
  }
  return result;
}

}  // namespace serial

}  // namespace catalg
