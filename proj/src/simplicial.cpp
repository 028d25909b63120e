#include "catalg/simplicial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "catalg/errors.hpp"

namespace catalg {

StrictMap StrictMap::identity(int k) {
  StrictMap m{k, k, {}};
  for (int i = 1; i <= k; ++i) m.values.push_back(i);
  return m;
}

bool StrictMap::is_strict() const {
  if (static_cast<int>(values.size()) != from) return false;
  int prev = 0;
  for (int v : values) {
    if (v <= prev || v > to) return false;
    prev = v;
  }
  return true;
}

std::string StrictMap::to_string() const {
  std::string out = "[" + std::to_string(from) + "]->[" + std::to_string(to) + "]:(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + ")";
}

StrictMap compose(const StrictMap& g, const StrictMap& f) {
  if (f.to != g.from) throw EndpointMismatch("cannot compose " + g.to_string() + " after " + f.to_string());
  StrictMap out{f.from, g.to, {}};
  for (int v : f.values) out.values.push_back(g(v));
  return out;
}

std::vector<StrictMap> strict_maps(int r, int k) {
  std::vector<StrictMap> out;
  if (r < 0 || k < 0 || r > k) return out;
  StrictMap cur{r, k, {}};
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.values.size()) == r) {
      out.push_back(cur);
      return;
    }
    const int remaining = r - static_cast<int>(cur.values.size());
    for (int v = next; v <= k - remaining + 1; ++v) {
      cur.values.push_back(v);
      self(self, v + 1);
      cur.values.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

bool is_initial(const SubsetOfN& s) { return s == SubsetOfN::initial(s.n(), s.size()); }

}  // namespace

StrictMap least_preimage(const Morphism& f) {
  if (!is_initial(f.dom()) || !is_initial(f.cod())) {
    throw std::invalid_argument("least_preimage needs a map between initial segments");
  }
  if (!f.is_order_preserving()) throw std::invalid_argument("least_preimage needs an order-preserving map");
  const int r = f.dom().size();
  const int k = f.cod().size();
  StrictMap g{k, r, std::vector<int>(static_cast<std::size_t>(k), 0)};
  for (int x = r; x >= 1; --x) g.values[static_cast<std::size_t>(f(x) - 1)] = x;
  return g;
}

Morphism largest_below(const StrictMap& g, int ambient) {
  if (!g.is_strict() || !g.fixes_one() || g.from == 0) {
    throw std::invalid_argument("largest_below needs a strict map fixing 1: " + g.to_string());
  }
  if (g.to > ambient) throw std::invalid_argument("ambient size too small");
  std::vector<int> values;
  for (int j = 1; j <= g.to; ++j) {
    int best = 1;
    for (int i = 1; i <= g.from; ++i) {
      if (g(i) <= j) best = i;
    }
    values.push_back(best);
  }
  return Morphism(SubsetOfN::initial(ambient, g.to), SubsetOfN::initial(ambient, g.from), values);
}

StrictMap shift_up(const StrictMap& g) {
  StrictMap out{g.from + 1, g.to + 1, {1}};
  for (int v : g.values) out.values.push_back(v + 1);
  return out;
}

StrictMap shift_down(const StrictMap& g) {
  if (g.from == 0 || !g.fixes_one()) throw std::invalid_argument("shift_down needs a map fixing 1");
  StrictMap out{g.from - 1, g.to - 1, {}};
  for (std::size_t i = 1; i < g.values.size(); ++i) out.values.push_back(g.values[i] - 1);
  return out;
}

FunctorPair delta_iso(int n, const Limits& limits) {
  if (n < 0) throw std::invalid_argument("negative size");
  if (n + 1 > limits.max_n) throw ResourceLimit("delta_iso size " + std::to_string(n) + " exceeds cap");
  FunctorPair fp;
  fp.n = n;
  fp.onto = build_skeleton_seo(n + 1, limits);
  const int top = n + 1;

  for (int r = 1; r <= top; ++r) {
    for (int k = 1; k <= top; ++k) {
      for (auto& g : strict_maps(r, k)) {
        if (g.fixes_one()) fp.fixing.push_back(std::move(g));
      }
    }
  }
  for (int r = 0; r <= n; ++r) {
    for (int k = 0; k <= n; ++k) {
      for (auto& g : strict_maps(r, k)) fp.strict.push_back(std::move(g));
    }
  }
  std::map<StrictMap, std::size_t> fixing_index;
  for (std::size_t i = 0; i < fp.fixing.size(); ++i) fixing_index.emplace(fp.fixing[i], i);
  std::map<StrictMap, std::size_t> strict_index;
  for (std::size_t i = 0; i < fp.strict.size(); ++i) strict_index.emplace(fp.strict[i], i);

  std::map<std::size_t, std::size_t> onto_position;
  for (std::size_t id = 0; id < fp.onto.morphism_count(); ++id) {
    if (fp.onto.morphism(id).dom().empty()) continue;
    onto_position.emplace(id, fp.onto_ids.size());
    fp.onto_ids.push_back(id);
  }

  auto lookup = [](const auto& index, const auto& key) {
    auto it = index.find(key);
    if (it == index.end()) throw std::logic_error("functor image outside the target category");
    return it->second;
  };
  for (auto id : fp.onto_ids) fp.g_table.push_back(lookup(fixing_index, least_preimage(fp.onto.morphism(id))));
  for (const auto& g : fp.fixing) {
    auto id = fp.onto.find(largest_below(g, top));
    if (!id) throw std::logic_error("inverse image outside the skeleton");
    fp.g_inverse_table.push_back(lookup(onto_position, *id));
  }
  for (const auto& g : fp.strict) fp.f_table.push_back(lookup(fixing_index, shift_up(g)));
  for (const auto& g : fp.fixing) fp.f_inverse_table.push_back(lookup(strict_index, shift_down(g)));
  return fp;
}

FunctorCheck check_functor_pair(const FunctorPair& fp) {
  FunctorCheck c;
  const auto& cat = fp.onto;

  c.g_round_trip = fp.g_table.size() == fp.onto_ids.size() && fp.g_inverse_table.size() == fp.fixing.size();
  for (std::size_t p = 0; p < fp.g_table.size() && c.g_round_trip; ++p) {
    c.g_round_trip = fp.g_inverse_table[fp.g_table[p]] == p;
  }
  for (std::size_t q = 0; q < fp.g_inverse_table.size() && c.g_round_trip; ++q) {
    c.g_round_trip = fp.g_table[fp.g_inverse_table[q]] == q;
  }

  c.g_preserves_identities = true;
  for (std::size_t p = 0; p < fp.onto_ids.size(); ++p) {
    if (cat.morphism(fp.onto_ids[p]).is_identity()) {
      const auto& g = fp.fixing[fp.g_table[p]];
      c.g_preserves_identities = c.g_preserves_identities && g == StrictMap::identity(g.from);
    }
  }

  std::map<std::size_t, std::size_t> position;
  for (std::size_t p = 0; p < fp.onto_ids.size(); ++p) position.emplace(fp.onto_ids[p], p);
  c.g_reverses_composition = true;
  for (std::size_t a = 0; a < fp.onto_ids.size(); ++a) {
    for (std::size_t b = 0; b < fp.onto_ids.size(); ++b) {
      const auto f1 = fp.onto_ids[a];
      const auto f2 = fp.onto_ids[b];
      if (cat.target(f1) != cat.source(f2)) continue;
      const auto composite = position.at(cat.compose(f2, f1));
      const auto& g1 = fp.fixing[fp.g_table[a]];
      const auto& g2 = fp.fixing[fp.g_table[b]];
      if (g2.to != g1.from || !(fp.fixing[fp.g_table[composite]] == compose(g1, g2))) {
        c.g_reverses_composition = false;
      }
    }
  }

  c.f_round_trip = fp.f_table.size() == fp.strict.size() && fp.f_inverse_table.size() == fp.fixing.size();
  for (std::size_t p = 0; p < fp.f_table.size() && c.f_round_trip; ++p) {
    c.f_round_trip = fp.f_inverse_table[fp.f_table[p]] == p;
  }
  for (std::size_t q = 0; q < fp.f_inverse_table.size() && c.f_round_trip; ++q) {
    c.f_round_trip = fp.f_table[fp.f_inverse_table[q]] == q;
  }

  c.f_preserves_composition = true;
  for (std::size_t a = 0; a < fp.strict.size(); ++a) {
    for (std::size_t b = 0; b < fp.strict.size(); ++b) {
      const auto& f = fp.strict[a];
      const auto& g = fp.strict[b];
      if (f.to != g.from) continue;
      const auto& fa = fp.fixing[fp.f_table[a]];
      const auto& fb = fp.fixing[fp.f_table[b]];
      if (fa.to != fb.from || !(shift_up(compose(g, f)) == compose(fb, fa))) {
        c.f_preserves_composition = false;
      }
    }
  }
  return c;
}

}  // namespace catalg
