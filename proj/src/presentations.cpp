#include "catalg/presentations.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "catalg/errors.hpp"

namespace catalg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

bool admissible(const SubsetOfN& a, int i, int j) {
  if (i < 1 || i >= j) return false;
  for (int x = i + 1; x <= j; ++x) {
    if (!a.contains(x)) return false;
  }
  return true;
}

bool is_valid(const GeneratorLabel& g) {
  return std::visit(overloaded{
                        [](const Simplicial& s) { return s.k >= 1 && s.k + 1 <= s.n && s.i >= 1 && s.i <= s.k; },
                        [](const Catalan& c) { return c.j >= 2 && c.domain.contains(c.j); },
                        [](const Decreasing& d) { return d.domain.contains(d.j) && admissible(d.domain, d.i, d.j); },
                    },
                    g);
}

SubsetOfN source(const GeneratorLabel& g) {
  return std::visit(overloaded{
                        [](const Simplicial& s) { return SubsetOfN::initial(s.n, s.k + 1); },
                        [](const Catalan& c) { return c.domain; },
                        [](const Decreasing& d) { return d.domain; },
                    },
                    g);
}

SubsetOfN target(const GeneratorLabel& g) {
  return std::visit(overloaded{
                        [](const Simplicial& s) { return SubsetOfN::initial(s.n, s.k); },
                        [](const Catalan& c) { return c.domain.without(c.j).with(c.j - 1); },
                        [](const Decreasing& d) { return d.domain.without(d.j).with(d.i); },
                    },
                    g);
}

Morphism evaluate(const GeneratorLabel& g) {
  if (!is_valid(g)) throw std::invalid_argument("not a generator: " + to_string(g));
  const SubsetOfN dom = source(g);
  std::vector<int> values;
  for (int x : dom.elements()) {
    const int y = std::visit(overloaded{
                                 [x](const Simplicial& s) { return x <= s.i ? x : x - 1; },
                                 [x](const Catalan& c) { return x == c.j ? x - 1 : x; },
                                 [x](const Decreasing& d) { return x == d.j ? d.i : x; },
                             },
                             g);
    values.push_back(y);
  }
  return Morphism(dom, target(g), values);
}

std::string to_string(const GeneratorLabel& g) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const Simplicial& s) { os << "d_" << s.i << "^" << s.k; },
                 [&](const Catalan& c) { os << "d_" << c.j << "^" << c.domain.to_string(); },
                 [&](const Decreasing& d) { os << "d_{" << d.i << "," << d.j << "}^" << d.domain.to_string(); },
             },
             g);
  return os.str();
}

Path Path::from_word(std::vector<GeneratorLabel> word) {
  if (word.empty()) throw std::invalid_argument("use Path::identity for the empty word");
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    if (!(catalg::source(word[k]) == catalg::target(word[k + 1]))) {
      throw EndpointMismatch("word does not compose at position " + std::to_string(k));
    }
  }
  Path p{catalg::source(word.back()), catalg::target(word.front()), std::move(word)};
  return p;
}

std::string Path::to_string() const {
  if (word.empty()) return "1_" + source.to_string();
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ' ';
    out += catalg::to_string(word[k]);
  }
  return out;
}

Morphism evaluate(const Path& p) {
  Morphism acc = Morphism::identity(p.source);
  for (auto it = p.word.rbegin(); it != p.word.rend(); ++it) acc = compose(evaluate(*it), acc);
  return acc;
}

std::string Relation::to_string() const {
  return family + ": " + left.to_string() + " = " + right.to_string();
}

std::vector<GeneratorLabel> generators(CategoryKind kind, int n) {
  if (n < 0) throw std::invalid_argument("negative ambient size");
  std::vector<GeneratorLabel> out;
  switch (kind) {
    case CategoryKind::SEO:
      for (int k = 1; k + 1 <= n; ++k) {
        for (int i = 1; i <= k; ++i) out.emplace_back(Simplicial{n, k, i});
      }
      break;
    case CategoryKind::EC:
      for (const auto& a : all_subsets(n)) {
        for (int j : a.elements()) {
          if (j >= 2) out.emplace_back(Catalan{a, j});
        }
      }
      break;
    case CategoryKind::EF:
      for (const auto& a : all_subsets(n)) {
        for (int j : a.elements()) {
          for (int i = 1; i < j; ++i) {
            if (admissible(a, i, j)) out.emplace_back(Decreasing{a, i, j});
          }
        }
      }
      break;
    case CategoryKind::EO:
      throw std::invalid_argument("EO is not skeletal; use SEO for its quiver");
  }
  return out;
}

std::vector<Relation> simplicial_relations(int ambient, int max_level) {
  std::vector<Relation> out;
  for (int k = 2; k <= max_level; ++k) {
    for (int j = 2; j <= k; ++j) {
      for (int i = 1; i < j; ++i) {
        auto left = Path::from_word({Simplicial{ambient, k - 1, i}, Simplicial{ambient, k, j}});
        auto right = Path::from_word({Simplicial{ambient, k - 1, j - 1}, Simplicial{ambient, k, i}});
        out.push_back({"simplicial", std::move(left), std::move(right)});
      }
    }
  }
  return out;
}

namespace {

// Index pairs in written order; the rightmost pair is applied first,
// starting from `domain`. Returns nullopt if some step is not a generator.
template <typename Make, typename Index>
std::optional<Path> chain(const SubsetOfN& domain, const std::vector<Index>& written, Make make) {
  std::vector<GeneratorLabel> word(written.size(), GeneratorLabel{Simplicial{0, 0, 0}});
  SubsetOfN current = domain;
  for (std::size_t k = written.size(); k-- > 0;) {
    GeneratorLabel g = make(current, written[k]);
    if (!is_valid(g)) return std::nullopt;
    word[k] = g;
    current = target(g);
  }
  return Path::from_word(std::move(word));
}

std::optional<Path> catalan_word(const SubsetOfN& a, const std::vector<int>& written) {
  return chain(a, written, [](const SubsetOfN& dom, int j) -> GeneratorLabel { return Catalan{dom, j}; });
}

std::optional<Path> decreasing_word(const SubsetOfN& a, const std::vector<std::pair<int, int>>& written) {
  return chain(a, written, [](const SubsetOfN& dom, std::pair<int, int> ij) -> GeneratorLabel {
    return Decreasing{dom, ij.first, ij.second};
  });
}

template <typename Word, typename Build>
void emit(std::vector<Relation>& out, std::vector<std::string>* rejected, const std::string& family,
          const SubsetOfN& a, const Word& left, const Word& right, Build build, const std::string& indices) {
  auto lhs = build(a, left);
  if (!lhs) return;  // inadmissible index choice
  auto rhs = build(a, right);
  if (!rhs) {
    if (rejected) rejected->push_back(family + " at A=" + a.to_string() + " " + indices + ": right side malformed");
    return;
  }
  Relation r{family, std::move(*lhs), std::move(*rhs)};
  if (!r.sound()) {
    if (rejected) rejected->push_back(family + " at A=" + a.to_string() + " " + indices + ": sides differ");
    return;
  }
  out.push_back(std::move(r));
}

std::vector<Relation> catalan_relations(int n, std::vector<std::string>* rejected) {
  std::vector<Relation> out;
  for (const auto& a : all_subsets(n)) {
    for (int i = 2; i <= n; ++i) {
      for (int j = i + 2; j <= n; ++j) {
        if (!a.contains(i) || !a.contains(j)) continue;
        emit(out, rejected, "PC1", a, std::vector<int>{i, j}, std::vector<int>{j, i}, catalan_word,
             "i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
    }
    for (int i = 2; i + 1 <= n; ++i) {
      if (!a.contains(i) || !a.contains(i + 1)) continue;
      emit(out, rejected, "PC2", a, std::vector<int>{i, i + 1}, std::vector<int>{i, i + 1, i}, catalan_word,
           "i=" + std::to_string(i));
    }
  }
  return out;
}

std::vector<Relation> decreasing_relations(int n, std::vector<std::string>* rejected) {
  using W = std::vector<std::pair<int, int>>;
  std::vector<Relation> out;
  for (const auto& a : all_subsets(n)) {
    for (int j = 1; j <= n; ++j) {
      for (int t = j + 1; t <= n; ++t) {
        if (!a.contains(j) || !a.contains(t)) continue;
        for (int i = 1; i < j; ++i) {
          for (int s = 1; s < t; ++s) {
            const std::string idx = "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                    " s=" + std::to_string(s) + " t=" + std::to_string(t);
            const W lead{{i, j}, {s, t}};
            if (s > j) emit(out, rejected, "PF1", a, lead, W{{s, t}, {i, j}}, decreasing_word, idx);
            if (s == j) emit(out, rejected, "PF2", a, lead, W{{i, j}, {j, t}, {i, j}}, decreasing_word, idx);
            if (i < s && s < j && a.contains(s)) {
              emit(out, rejected, "PF3", a, lead, W{{s, j}, {j, t}, {i, j}}, decreasing_word, idx);
            }
            if (s <= i) emit(out, rejected, "PF4", a, lead, W{{s, j}, {j, t}, {i, j}}, decreasing_word, idx);
            if (i < s && s < j && !a.contains(s)) {
              emit(out, rejected, "PF5", a, lead, W{{s, j}, {j, t}, {i, s}, {s, j}}, decreasing_word, idx);
            }
            if (s < i && !a.contains(i)) {
              emit(out, rejected, "PF6", a, W{{i, j}, {s, i}, {i, t}}, W{{s, j}, {j, t}, {i, j}}, decreasing_word,
                   idx);
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Relation> relations(CategoryKind kind, int n, std::vector<std::string>* rejected) {
  if (n < 0) throw std::invalid_argument("negative ambient size");
  switch (kind) {
    case CategoryKind::SEO: return simplicial_relations(n, n - 1);
    case CategoryKind::EC: return catalan_relations(n, rejected);
    case CategoryKind::EF: return decreasing_relations(n, rejected);
    case CategoryKind::EO: break;
  }
  throw std::invalid_argument("EO is not skeletal; use SEO for its presentation");
}

std::vector<Relation> without_families(const std::vector<Relation>& rels, const std::vector<std::string>& drop) {
  std::vector<Relation> out;
  for (const auto& r : rels) {
    if (std::find(drop.begin(), drop.end(), r.family) == drop.end()) out.push_back(r);
  }
  return out;
}

std::optional<std::size_t> PresentationQuiver::arrow_index(const GeneratorLabel& g) const {
  auto it = std::find(labels.begin(), labels.end(), g);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

PresentationQuiver presentation_quiver(const FiniteCategory& cat) {
  PresentationQuiver q;
  q.kind = cat.kind();
  q.n = cat.n();
  q.vertices = cat.objects();
  q.labels = generators(cat.kind(), cat.n());
  for (const auto& g : q.labels) {
    q.morphisms.push_back(evaluate(g));
    auto s = cat.object_index(source(g));
    auto t = cat.object_index(target(g));
    if (!s || !t) throw std::logic_error("generator endpoint is not an object: " + to_string(g));
    q.source.push_back(*s);
    q.target.push_back(*t);
  }
  if (q.labels.size() > 0xFFFF) throw ResourceLimit("too many generators for 16-bit words");
  return q;
}

Path to_path(const PresentationQuiver& q, std::size_t source, const Word& w) {
  if (w.empty()) return Path::identity(q.vertices[source]);
  std::vector<GeneratorLabel> word;
  word.reserve(w.size());
  for (auto a : w) word.push_back(q.labels[a]);
  return Path::from_word(std::move(word));
}

Path factorize(const FiniteCategory& cat, const Morphism& f) {
  if (!cat.find(f)) throw std::invalid_argument("morphism is not in the category: " + f.to_string());
  const Family family = family_of(cat.kind());
  std::vector<GeneratorLabel> reversed;  // application order
  Morphism rest = f;
  while (!rest.is_identity()) {
    std::vector<GeneratorLabel> candidates;
    const auto dom = rest.dom();
    if (cat.kind() == CategoryKind::SEO) {
      const int m = dom.size();
      for (int i = 1; i < m; ++i) {
        if (rest(i) == rest(i + 1)) candidates.emplace_back(Simplicial{cat.n(), m - 1, i});
      }
    } else {
      int moved = 0;
      for (int x : dom.elements()) {
        if (rest(x) < x) {
          moved = x;
          break;
        }
      }
      if (moved == 0) throw std::logic_error("non-identity without a moved element: " + rest.to_string());
      if (cat.kind() == CategoryKind::EC) {
        candidates.emplace_back(Catalan{dom, moved});
      } else if (cat.kind() == CategoryKind::EF) {
        for (int i = moved - 1; i >= 1; --i) candidates.emplace_back(Decreasing{dom, i, moved});
      } else {
        throw std::invalid_argument("factorize needs a skeletal category (SEO, EC, EF)");
      }
    }
    bool split = false;
    for (const auto& d : candidates) {
      if (!is_valid(d)) continue;
      auto g = factor_through(rest, evaluate(d));
      if (!g || !satisfies(family, *g)) continue;
      reversed.push_back(d);
      rest = *g;
      split = true;
      break;
    }
    if (!split) throw std::logic_error("no generator splits off " + rest.to_string());
  }
  if (reversed.empty()) return Path::identity(f.dom());
  std::reverse(reversed.begin(), reversed.end());
  return Path::from_word(std::move(reversed));
}

}  // namespace catalg
