#include "catalg/report.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "catalg/enumeration.hpp"
#include "catalg/invariants.hpp"
#include "catalg/presentations.hpp"

namespace catalg {

using nlohmann::json;

json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) {
    const long x = v.get_si();
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(x);
    }
  }
  return v.get_str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

namespace {

json witness_to_json(const ReportWitness& w) {
  return {{"source", w.source}, {"target", w.target}, {"reason", w.reason},
          {"first", w.first},   {"second", w.second}, {"value", w.value}};
}

json certificate_to_json(const Certificate& c) {
  json pairs = json::array();
  for (const auto& p : c.hom_pairs) {
    pairs.push_back({{"source", p.source},
                     {"target", p.target},
                     {"paths", p.paths},
                     {"classes", p.classes},
                     {"hom_size", p.hom_size},
                     {"ok", p.ok}});
  }
  json out = {{"generator_count", c.generator_count},
              {"relation_count", c.relation_count},
              {"rejected", c.rejected},
              {"failures", c.failures},
              {"hom_pairs", pairs},
              {"passed", c.passed}};
  out["witness"] = c.witness ? witness_to_json(*c.witness) : json(nullptr);
  return out;
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.generator_count = j.at("generator_count").get<std::size_t>();
  c.relation_count = j.at("relation_count").get<std::size_t>();
  c.rejected = j.at("rejected").get<std::vector<std::string>>();
  c.failures = j.at("failures").get<std::vector<std::string>>();
  for (const auto& p : j.at("hom_pairs")) {
    c.hom_pairs.push_back({p.at("source").get<std::string>(), p.at("target").get<std::string>(),
                           p.at("paths").get<std::size_t>(), p.at("classes").get<std::size_t>(),
                           p.at("hom_size").get<std::size_t>(), p.at("ok").get<bool>()});
  }
  const auto& w = j.at("witness");
  if (!w.is_null()) {
    c.witness = ReportWitness{w.at("source").get<std::string>(), w.at("target").get<std::string>(),
                              w.at("reason").get<std::string>(), w.at("first").get<std::string>(),
                              w.at("second").get<std::string>(), w.at("value").get<std::string>()};
  }
  c.passed = j.at("passed").get<bool>();
  return c;
}

}  // namespace

json to_json(const Report& r) {
  json arrows = json::array();
  for (const auto& a : r.quiver_arrows) arrows.push_back({{"source", a.source}, {"target", a.target}, {"label", a.label}});
  json rows = json::array();
  for (const auto& row : r.cartan_rows) {
    json jr = json::array();
    for (const auto& v : row) jr.push_back(bigint_to_json(v));
    rows.push_back(jr);
  }
  json radical = json::array();
  for (const auto& v : r.radical_dimensions) radical.push_back(bigint_to_json(v));
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});

  json out = {{"schema", kReportSchema},
              {"command", r.command},
              {"family", r.family},
              {"n", r.n},
              {"category", r.category},
              {"loewy_length", r.loewy_length},
              {"block_count", r.block_count},
              {"blocks", r.blocks},
              {"quiver",
               {{"vertex_count", r.quiver_vertex_count}, {"arrow_count", r.quiver_arrows.size()}, {"arrows", arrows}}},
              {"cartan", {{"objects", r.cartan_objects}, {"rows", rows}}},
              {"radical_dimensions", radical},
              {"checks", checks},
              {"passed", r.passed}};
  if (r.presentation) out["presentation"] = certificate_to_json(*r.presentation);
  if (r.category_data) out["category_data"] = *r.category_data;
  return out;
}

Report report_from_json(const json& j) {
  try {
    if (j.at("schema").get<std::string>() != kReportSchema) throw std::invalid_argument("unknown report schema");
    Report r;
    r.command = j.at("command").get<std::string>();
    r.family = j.at("family").get<std::string>();
    r.n = j.at("n").get<int>();
    r.category = j.at("category").get<std::string>();
    r.loewy_length = j.at("loewy_length").get<int>();
    r.block_count = j.at("block_count").get<std::size_t>();
    r.blocks = j.at("blocks").get<std::vector<std::vector<std::string>>>();
    const auto& q = j.at("quiver");
    r.quiver_vertex_count = q.at("vertex_count").get<std::size_t>();
    for (const auto& a : q.at("arrows")) {
      r.quiver_arrows.push_back(
          {a.at("source").get<std::string>(), a.at("target").get<std::string>(), a.at("label").get<std::string>()});
    }
    if (q.at("arrow_count").get<std::size_t>() != r.quiver_arrows.size()) {
      throw std::invalid_argument("arrow_count disagrees with the arrow list");
    }
    const auto& c = j.at("cartan");
    r.cartan_objects = c.at("objects").get<std::vector<std::string>>();
    for (const auto& row : c.at("rows")) {
      std::vector<BigInt> values;
      for (const auto& v : row) values.push_back(bigint_from_json(v));
      r.cartan_rows.push_back(std::move(values));
    }
    for (const auto& v : j.at("radical_dimensions")) r.radical_dimensions.push_back(bigint_from_json(v));
    for (const auto& ch : j.at("checks")) {
      r.checks.push_back({ch.at("name").get<std::string>(), ch.at("pass").get<bool>(), ch.at("detail").get<std::string>()});
    }
    if (j.contains("presentation")) r.presentation = certificate_from_json(j.at("presentation"));
    if (j.contains("category_data")) r.category_data = j.at("category_data");
    r.passed = j.at("passed").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const Report& r) {
  std::ostringstream os;
  if (r.command == "crosscheck") {
    os << "name,pass,detail\n";
    for (const auto& c : r.checks) os << csv_field(c.name) << ',' << (c.pass ? "true" : "false") << ',' << csv_field(c.detail) << '\n';
  } else if (r.command == "verify-presentation" && r.presentation) {
    os << "source,target,paths,classes,hom_size,ok\n";
    for (const auto& p : r.presentation->hom_pairs) {
      os << csv_field(p.source) << ',' << csv_field(p.target) << ',' << p.paths << ',' << p.classes << ','
         << p.hom_size << ',' << (p.ok ? "true" : "false") << '\n';
    }
  } else {
    os << "target\\source";
    for (const auto& o : r.cartan_objects) os << ',' << csv_field(o);
    os << '\n';
    for (std::size_t i = 0; i < r.cartan_rows.size(); ++i) {
      os << csv_field(r.cartan_objects[i]);
      for (const auto& v : r.cartan_rows[i]) os << ',' << v.get_str();
      os << '\n';
    }
  }
  return os.str();
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.command << ": family " << r.family << ", n = " << r.n << " (" << r.category << ")\n";
  os << "loewy length: " << r.loewy_length << '\n';
  os << "blocks: " << r.block_count << '\n';
  for (const auto& b : r.blocks) {
    os << " ";
    for (const auto& o : b) os << ' ' << o;
    os << '\n';
  }
  os << "quiver: " << r.quiver_vertex_count << " vertices, " << r.quiver_arrows.size() << " arrows\n";
  for (const auto& a : r.quiver_arrows) os << "  " << a.label << " : " << a.source << " -> " << a.target << '\n';
  os << "cartan matrix (row = target, column = source):\n";
  os << "  objects:";
  for (const auto& o : r.cartan_objects) os << ' ' << o;
  os << '\n';
  for (const auto& row : r.cartan_rows) {
    os << " ";
    for (const auto& v : row) os << ' ' << v.get_str();
    os << '\n';
  }
  os << "radical dimensions:";
  for (const auto& v : r.radical_dimensions) os << ' ' << v.get_str();
  os << '\n';
  if (!r.checks.empty()) {
    os << "checks:\n";
    for (const auto& c : r.checks) os << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
  if (r.presentation) {
    const auto& p = *r.presentation;
    std::size_t ok = 0;
    for (const auto& h : p.hom_pairs) ok += h.ok ? 1 : 0;
    os << "presentation certificate:\n";
    os << "  generators: " << p.generator_count << '\n';
    os << "  relations: " << p.relation_count << '\n';
    os << "  rejected instances: " << p.rejected.size() << '\n';
    for (const auto& s : p.rejected) os << "    " << s << '\n';
    os << "  hom-pairs with classes = hom-set size: " << ok << " of " << p.hom_pairs.size() << '\n';
    for (const auto& h : p.hom_pairs) {
      if (h.paths == 0 && h.hom_size == 0) continue;
      os << "    " << h.source << " -> " << h.target << ": paths " << h.paths << ", classes " << h.classes
         << ", hom " << h.hom_size << (h.ok ? "" : "  MISMATCH") << '\n';
    }
    for (const auto& f : p.failures) os << "  failure: " << f << '\n';
    if (p.witness) {
      const auto& w = *p.witness;
      os << "  witness " << w.source << " -> " << w.target << ": " << w.reason << '\n';
      if (!w.first.empty()) os << "    first:  " << w.first << '\n';
      if (!w.second.empty()) os << "    second: " << w.second << '\n';
      if (!w.value.empty()) os << "    value:  " << w.value << '\n';
    }
  }
  os << "result: " << (r.passed ? "pass" : "fail") << '\n';
  return os.str();
}

std::string object_label(const FiniteCategory& cat, std::size_t object) {
  const auto& o = cat.objects()[object];
  if (cat.kind() == CategoryKind::SEO) return "[" + std::to_string(o.size()) + "]";
  return o.to_string();
}

json category_to_json(const FiniteCategory& cat) {
  json objects = json::array();
  for (std::size_t i = 0; i < cat.object_count(); ++i) objects.push_back(object_label(cat, i));
  json homs = json::array();
  for (std::size_t s = 0; s < cat.object_count(); ++s) {
    for (std::size_t t = 0; t < cat.object_count(); ++t) {
      if (cat.hom_size(s, t) == 0) continue;
      json maps = json::array();
      for (const auto& m : cat.hom(s, t)) maps.push_back(m.values());
      homs.push_back({{"source", object_label(cat, s)}, {"target", object_label(cat, t)}, {"maps", maps}});
    }
  }
  return {{"kind", to_string(cat.kind())}, {"n", cat.n()}, {"objects", objects}, {"homs", homs}};
}

namespace {

struct Built {
  FiniteCategory skeletal;
  FiniteCategory ambient;  // carries the radical filtration
  DepthTable depths;
};

Built build_for(Family family, int n, const Limits& limits) {
  auto skeletal = build(skeletal_kind(family), n, limits);
  auto ambient = family == Family::PO ? build_category(CategoryKind::EO, n, limits) : skeletal;
  auto depths = composition_depth(ambient);
  return {std::move(skeletal), std::move(ambient), std::move(depths)};
}

std::string category_name(const FiniteCategory& cat) { return to_string(cat.kind()) + "_" + std::to_string(cat.n()); }

Report base_report(const std::string& command, Family family, int n, const Built& b, const ReportOptions& options) {
  const auto& cat = b.skeletal;
  Report r;
  r.command = command;
  r.family = to_string(family);
  r.n = n;
  r.category = category_name(cat);
  r.loewy_length = loewy_length(b.depths);
  for (const auto& comp : blocks(cat)) {
    std::vector<std::string> labels;
    for (auto o : comp) labels.push_back(object_label(cat, o));
    r.blocks.push_back(std::move(labels));
  }
  r.block_count = r.blocks.size();

  const auto quiver = irreducible_morphisms(cat);
  const auto pq = presentation_quiver(cat);
  r.quiver_vertex_count = quiver.vertex_count;
  for (const auto& a : quiver.arrows) {
    std::string label = cat.morphism(a.morphism).to_string();
    for (std::size_t k = 0; k < pq.arrow_count(); ++k) {
      if (pq.morphisms[k] == cat.morphism(a.morphism)) label = to_string(pq.labels[k]);
    }
    r.quiver_arrows.push_back({object_label(cat, a.source), object_label(cat, a.target), label});
  }

  const auto cartan = cartan_matrix(cat);
  for (std::size_t i = 0; i < cat.object_count(); ++i) r.cartan_objects.push_back(object_label(cat, i));
  for (std::size_t i = 0; i < cartan.rows(); ++i) {
    std::vector<BigInt> row;
    for (std::size_t j = 0; j < cartan.cols(); ++j) row.push_back(cartan(i, j));
    r.cartan_rows.push_back(std::move(row));
  }
  r.radical_dimensions = radical_dimensions(b.depths);
  if (options.with_homs) r.category_data = category_to_json(cat);
  r.passed = true;
  return r;
}

std::string mismatch(const BigInt& expected, const BigInt& got) {
  return "expected " + expected.get_str() + ", got " + got.get_str();
}

/// Partial maps on [n] in the family, by running through all (n+1)^n tables.
BigInt count_family_partial_maps(Family family, int n) {
  PartialMap p(static_cast<std::size_t>(n), 0);
  BigInt count = 0;
  while (true) {
    if (satisfies(family, corestrict(n, p))) ++count;
    std::size_t pos = 0;
    while (pos < p.size() && p[pos] == n) p[pos++] = 0;
    if (pos == p.size()) break;
    ++p[pos];
  }
  return count;
}

}  // namespace

Report invariants_report(Family family, int n, const ReportOptions& options) {
  const auto b = build_for(family, n, options.limits);
  return base_report("invariants", family, n, b, options);
}

Report crosscheck_report(Family family, int n, const ReportOptions& options) {
  const auto b = build_for(family, n, options.limits);
  Report r = base_report("crosscheck", family, n, b, options);
  const auto& cat = b.skeletal;
  auto add = [&](std::string name, bool pass, std::string detail) {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  {
    const auto counted = cartan_matrix(cat);
    const auto closed = family == Family::PO   ? cartan_po_closed(n)
                        : family == Family::PC ? cartan_ec_closed(n)
                                               : cartan_ef_closed(n);
    const bool same = counted == closed;
    std::string detail = family == Family::PO ? "Pascal matrix C(j-2, i-2) vs hom-set sizes of SEO"
                                              : "closed-form entries vs hom-set sizes";
    if (!same) detail += ": differ";
    add("cartan_closed_vs_counted", same, detail);
  }

  {
    const long expected = family == Family::PO ? std::max(n, 1) : static_cast<long>(n) * (n - 1) / 2 + 1;
    add("loewy_length", r.loewy_length == expected, mismatch(expected, r.loewy_length));
  }

  {
    const auto reference = serial::composition_depth(b.ambient);
    add("depth_parallel_vs_serial", reference.depth == b.depths.depth,
        std::to_string(b.ambient.morphism_count()) + " morphisms compared");
  }

  if (family == Family::PO) {
    for (int k = 1; k <= std::max(n, 1); ++k) {
      const BigInt formula = dim_rad_po(n, k);
      const BigInt by_depth = radical_dimension(b.depths, k);
      BigInt by_defect = 0;
      for (std::size_t id = 0; id < b.ambient.morphism_count(); ++id) {
        if (defect(b.ambient.morphism(id)) >= k) ++by_defect;
      }
      add("radical_dimension_k" + std::to_string(k), formula == by_depth && by_depth == by_defect,
          "formula " + formula.get_str() + ", depth " + by_depth.get_str() + ", defect " + by_defect.get_str());
    }
  }

  {
    const auto quiver = irreducible_morphisms(cat);
    std::vector<std::size_t> irreducible;
    for (const auto& a : quiver.arrows) irreducible.push_back(a.morphism);
    std::vector<std::size_t> named;
    bool all_found = true;
    for (const auto& g : generators(cat.kind(), n)) {
      auto id = cat.find(evaluate(g));
      if (id) {
        named.push_back(*id);
      } else {
        all_found = false;
      }
    }
    std::sort(irreducible.begin(), irreducible.end());
    std::sort(named.begin(), named.end());
    bool pass = all_found && irreducible == named;
    std::string detail = std::to_string(named.size()) + " generators, " + std::to_string(irreducible.size()) +
                         " irreducible morphisms";
    if (family == Family::PO) {
      const std::size_t expected = n >= 1 ? static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 : 0;
      pass = pass && irreducible.size() == expected;
      detail += ", expected " + std::to_string(expected);
    }
    add("arrow_criterion", pass, detail);
  }

  {
    bool pass = true;
    std::size_t tried = 0;
    for (const auto& set : all_subsets(n)) {
      if (n >= 1 && !set.contains(1)) continue;
      const auto bar = bar_path(n, set).bar;
      ++tried;
      if (paths_below_det(bar) != paths_below_dp(bar)) pass = false;
    }
    add("det_vs_dp", pass, std::to_string(tried) + " boundaries");
  }

  if (family == Family::PC) {
    const auto full = SubsetOfN::full(n);
    const auto source = *cat.object_index(full);
    bool lattice = true;
    bool inclusion_exclusion = true;
    for (const auto& set : all_subsets(n)) {
      const auto target = *cat.object_index(set);
      if (count_EC_full(n, set) != BigInt(cat.hom_size(source, target))) inclusion_exclusion = false;
      BigInt maps = 0;
      for (const auto& sub : all_subsets(n)) {
        if (sub.is_subset_of(set)) maps += cat.hom_size(source, *cat.object_index(sub));
      }
      if (count_C(n, set) != maps) lattice = false;
    }
    add("lattice_count_vs_maps", lattice, "count_C against order-preserving decreasing maps from [n]");
    add("inclusion_exclusion_vs_maps", inclusion_exclusion, "count_EC_full against onto maps from [n]");
  }

  if (family == Family::PF) {
    bool pass = true;
    const auto objects = all_subsets(n);
    for (std::size_t a = 0; a < objects.size(); ++a) {
      for (const auto& set : objects) {
        BigInt maps = 0;
        for (std::size_t t = 0; t < objects.size(); ++t) {
          if (objects[t].is_subset_of(set)) maps += cat.hom_size(a, t);
        }
        if (count_decreasing(objects[a], set) != maps) pass = false;
      }
    }
    add("product_formula_vs_maps", pass, "count_decreasing against order-decreasing maps");
    const BigInt expected = pf_monoid_size(n);
    add("factorial_size", expected == BigInt(cat.morphism_count()), mismatch(expected, BigInt(cat.morphism_count())));
  }

  {
    const BigInt partial = count_family_partial_maps(family, n);
    const BigInt morphisms(b.ambient.morphism_count());
    add("monoid_size", partial == morphisms,
        "partial maps " + partial.get_str() + ", morphisms of " + category_name(b.ambient) + " " + morphisms.get_str());
  }

  {
    const std::size_t expected = n >= 1 ? 2 : 1;
    add("blocks", r.block_count == expected, mismatch(expected, r.block_count));
  }

  r.passed = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
  return r;
}

Report presentation_report(Family family, int n, const ReportOptions& options) {
  const auto b = build_for(family, n, options.limits);
  Report r = base_report("verify-presentation", family, n, b, options);
  const auto& cat = b.skeletal;
  const auto q = presentation_quiver(cat);
  Certificate cert;
  const auto rels = relations(cat.kind(), n, &cert.rejected);
  const auto v = verify_presentation(cat, q, rels, options.limits);
  cert.generator_count = v.generator_count;
  cert.relation_count = v.relation_count;
  cert.failures = v.failures;
  for (const auto& h : v.hom_pairs) {
    cert.hom_pairs.push_back(
        {object_label(cat, h.source), object_label(cat, h.target), h.paths, h.classes, h.hom_size, h.ok});
  }
  if (v.witness) {
    const auto& w = *v.witness;
    cert.witness = ReportWitness{object_label(cat, w.source),
                                 object_label(cat, w.target),
                                 w.reason,
                                 w.first ? w.first->to_string() : "",
                                 w.second ? w.second->to_string() : "",
                                 w.value ? w.value->to_string() : ""};
  }
  cert.passed = v.passed;
  r.presentation = cert;
  r.passed = cert.passed;
  return r;
}

}  // namespace catalg
