#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcforge/complex.hpp"
#include "bcforge/models.hpp"

namespace bcforge {

struct InvariantResult {
  std::string suite;
  bool pass = true;
  std::vector<std::string> details;
};

/// One induced map of a compare run. De Rham entries carry a total degree.
struct InducedEntry {
  Theory theory = Theory::DeRham;
  Bidegree at;
  bool total = false;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  bool injective = true;
  bool surjective = true;
  bool bijective() const { return injective && surjective; }
};

/// Cohomology representatives as sparse (label, coefficient) columns.
struct RepresentativeEntry {
  Theory theory = Theory::DeRham;
  Bidegree at;
  bool total = false;
  std::vector<std::vector<std::pair<std::string, std::string>>> vectors;
};

struct Report {
  std::string command;
  std::string model;
  std::string ambient;  ///< compare only
  int n = 0;
  std::optional<CohomologyTable> table;
  std::optional<std::map<int, std::int64_t>> ddbar;
  std::vector<InducedEntry> induced;
  std::vector<InvariantResult> invariants;
  std::vector<RepresentativeEntry> representatives;

  bool ddbar_satisfied() const;
};

/// validate, pd-axioms and star-closure results for a built model.
std::vector<InvariantResult> model_invariants(const BuiltModel& bm);

Report table_report(const BuiltModel& bm, const std::vector<Theory>& theories, bool with_ddbar,
                    bool with_representatives, unsigned threads = 0);
Report ddbar_report(const BuiltModel& bm, unsigned threads = 0);
Report compare_report(const BuiltModel& sub, const BuiltModel& ambient, const std::vector<Theory>& theories);

enum class Format { Text, Csv, Json };
std::optional<Format> parse_format(const std::string& key);

/// report-v1 renderings; the three formats carry the same numbers.
std::string render(const Report& r, Format f);
std::string render_json(const Report& r);
std::string render_csv(const Report& r);
std::string render_text(const Report& r);

/// Inverse of render_json; throws std::invalid_argument on schema errors.
Report report_from_json(const std::string& text);

}  // namespace bcforge
