#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bcforge/complex.hpp"

// Expected results for the shipped presets, transcribed from the worked
// examples of the source material. Bigraded columns follow antidiagonal_order(3).
namespace bcforge::golden {

struct GeneratorTable {
  std::string preset;
  std::string source;  ///< name of the transcribed table
  std::map<Bidegree, std::vector<std::string>> labels;
};

/// Generators listed by total degree only.
struct DegreeTable {
  std::string preset;
  std::string source;
  std::map<int, std::vector<std::string>> labels;
};

struct DimensionTable {
  std::string preset;
  std::vector<std::size_t> delbar;
  std::vector<std::size_t> bott_chern;
  std::vector<std::size_t> de_rham;
  /// Frolicher-type degrees for k = 1..5.
  std::vector<std::int64_t> ddbar;
  bool ddbar_lemma = false;
};

const std::vector<GeneratorTable>& generator_tables();
const std::vector<DegreeTable>& degree_tables();
const std::vector<DimensionTable>& dimension_tables();

}  // namespace bcforge::golden
