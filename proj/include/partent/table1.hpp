#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "partent/entropy.hpp"
#include "partent/state.hpp"

namespace partent {

// Labels 1..8 of the three-qubit basis used by the three-term catalog.
std::map<int, std::string> basis_label_map();

// Support of a label such as "127".
SupportPattern pattern_from_label(const std::string& label);

enum class Table1Case { I, II };

std::string to_string(Table1Case c);

struct Table1Row {
  std::string pattern_label;  // e.g. "127"
  SupportPattern support;
  Table1Case category;
  Partition witness_partition;  // finest partition; a single block for case II
};

// Reference catalog: 24 one-particle-separable supports and 32 genuinely
// entangled ones.
const std::vector<std::string>& reference_case_one();
const std::vector<std::string>& reference_case_two();

inline constexpr double kTable1MinMagnitude = 0.1;

// Classifies `trials_per_pattern` random states on each of the 56 three-term
// supports. Throws ClassificationUnstable when trials disagree or a support
// is neither consistently genuine nor consistently split into the same
// partition. Rows are ordered by label.
std::vector<Table1Row> reproduce_table1(int trials_per_pattern, std::uint64_t seed,
                                        const Tolerances& tol = {});

struct Table1Summary {
  int case_one = 0;
  int case_two = 0;
  std::vector<std::string> mismatches;  // labels whose case differs from the reference
  bool matches_reference() const { return case_one == 24 && case_two == 32 && mismatches.empty(); }
};

Table1Summary summarize_table1(const std::vector<Table1Row>& rows);

}  // namespace partent
