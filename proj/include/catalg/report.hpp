#pragma once

// Reports produced by the command-line front end, with JSON, CSV and plain
// text renderings. JSON keys are sorted and every list has a fixed order, so
// identical inputs give byte-identical output.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catalg/categories.hpp"
#include "catalg/exact_matrix.hpp"
#include "catalg/maps.hpp"
#include "json.hpp"

namespace catalg {

inline constexpr const char* kReportSchema = "catalg/1";

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  friend bool operator==(const Check&, const Check&) = default;
};

struct ReportArrow {
  std::string source;
  std::string target;
  std::string label;
  friend bool operator==(const ReportArrow&, const ReportArrow&) = default;
};

struct ReportHomPair {
  std::string source;
  std::string target;
  std::size_t paths = 0;
  std::size_t classes = 0;
  std::size_t hom_size = 0;
  bool ok = false;
  friend bool operator==(const ReportHomPair&, const ReportHomPair&) = default;
};

struct ReportWitness {
  std::string source;
  std::string target;
  std::string reason;
  std::string first;   // empty when absent
  std::string second;  // empty when absent
  std::string value;   // empty when absent
  friend bool operator==(const ReportWitness&, const ReportWitness&) = default;
};

struct Certificate {
  std::size_t generator_count = 0;
  std::size_t relation_count = 0;
  std::vector<std::string> rejected;
  std::vector<std::string> failures;
  std::vector<ReportHomPair> hom_pairs;
  std::optional<ReportWitness> witness;
  bool passed = false;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Report {
  std::string command;
  std::string family;
  int n = 0;
  std::string category;  // the skeletal category behind quiver and Cartan matrix
  int loewy_length = 0;
  std::size_t block_count = 0;
  std::vector<std::vector<std::string>> blocks;
  std::size_t quiver_vertex_count = 0;
  std::vector<ReportArrow> quiver_arrows;
  std::vector<std::string> cartan_objects;
  std::vector<std::vector<BigInt>> cartan_rows;
  std::vector<BigInt> radical_dimensions;  // k = 0, 1, ... up to the first zero
  std::vector<Check> checks;
  std::optional<Certificate> presentation;
  std::optional<nlohmann::json> category_data;  // see category_to_json
  bool passed = false;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Integers that fit in int64 become JSON numbers, others decimal strings.
nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& r);
/// Throws std::invalid_argument on a wrong schema or missing fields.
Report report_from_json(const nlohmann::json& j);

/// Cartan matrix (invariants), checks (crosscheck) or hom-pairs
/// (verify-presentation) as CSV.
std::string to_csv(const Report& r);
std::string to_text(const Report& r);

/// "[k]" for skeleton objects, "{1,3}" otherwise.
std::string object_label(const FiniteCategory& cat, std::size_t object);

/// Objects and every nonempty hom-set as value tables.
nlohmann::json category_to_json(const FiniteCategory& cat);

struct ReportOptions {
  Limits limits;
  bool with_homs = false;
};

Report invariants_report(Family family, int n, const ReportOptions& options = {});
/// Invariants plus one check per closed form against its direct count.
Report crosscheck_report(Family family, int n, const ReportOptions& options = {});
/// Invariants plus a presentation certificate.
Report presentation_report(Family family, int n, const ReportOptions& options = {});

}  // namespace catalg
