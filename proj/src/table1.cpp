#include "partent/table1.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "parallel.hpp"
#include "partent/errors.hpp"

namespace partent {

std::map<int, std::string> basis_label_map() {
  return {{1, "000"}, {2, "110"}, {3, "101"}, {4, "011"},
          {5, "111"}, {6, "001"}, {7, "010"}, {8, "100"}};
}

SupportPattern pattern_from_label(const std::string& label) {
  const auto labels = basis_label_map();
  std::vector<std::string> bits;
  for (char c : label) {
    const int k = c - '0';
    const auto it = labels.find(k);
    if (it == labels.end()) throw DimensionMismatch("unknown basis label '" + std::string(1, c) + "'");
    bits.push_back(it->second);
  }
  return SupportPattern::from_bitstrings(bits);
}

std::string to_string(Table1Case c) { return c == Table1Case::I ? "I" : "II"; }

const std::vector<std::string>& reference_case_one() {
  static const std::vector<std::string> rows{
      "127", "128", "136", "138", "146", "147", "167", "168",
      "178", "235", "238", "245", "247", "257", "258", "278",
      "345", "346", "356", "358", "368", "456", "457", "467"};
  return rows;
}

const std::vector<std::string>& reference_case_two() {
  static const std::vector<std::string> rows{
      "123", "124", "125", "126", "134", "135", "137", "145",
      "148", "156", "157", "158", "234", "236", "237", "246",
      "248", "256", "267", "268", "347", "348", "357", "367",
      "378", "458", "468", "478", "567", "568", "578", "678"};
  return rows;
}

std::vector<Table1Row> reproduce_table1(int trials_per_pattern, std::uint64_t seed,
                                        const Tolerances& tol) {
  if (trials_per_pattern < 3) throw DimensionMismatch("table1 needs at least 3 trials per pattern");

  std::vector<std::string> labels;
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      for (int k = j + 1; k <= 8; ++k) labels.push_back(std::to_string(i * 100 + j * 10 + k));

  std::mt19937_64 seeder(seed);
  std::vector<std::uint64_t> pattern_seeds(labels.size());
  for (auto& s : pattern_seeds) s = seeder();

  std::vector<std::optional<Table1Row>> rows(labels.size());
  detail::parallel_for(
      labels.size(),
      [&](std::size_t idx) {
        const auto support = pattern_from_label(labels[idx]);
        std::mt19937_64 trial_seeds(pattern_seeds[idx]);
        std::optional<Classification> first;
        for (int t = 0; t < trials_per_pattern; ++t) {
          const auto state = random_on_support(support, kTable1MinMagnitude, trial_seeds());
          auto c = classify(state, tol);
          if (!first) {
            first = std::move(c);
          } else if (c.verdict != first->verdict || c.partition != first->partition) {
            throw ClassificationUnstable("pattern |" + labels[idx] +
                                         "> classifies differently across trials");
          }
        }
        Table1Case category;
        if (first->verdict == Verdict::GenuinelyEntangled) {
          category = Table1Case::II;
        } else if (first->verdict == Verdict::PartiallyEntangled) {
          category = Table1Case::I;
        } else {
          throw ClassificationUnstable("pattern |" + labels[idx] +
                                       "> is fully separable, which three terms cannot be");
        }
        rows[idx] = Table1Row{labels[idx], support, category, first->partition};
      },
      8);

  std::vector<Table1Row> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

Table1Summary summarize_table1(const std::vector<Table1Row>& rows) {
  Table1Summary summary;
  const auto& one = reference_case_one();
  const auto& two = reference_case_two();
  for (const auto& row : rows) {
    (row.category == Table1Case::I ? summary.case_one : summary.case_two) += 1;
    const auto& expected = row.category == Table1Case::I ? one : two;
    if (std::find(expected.begin(), expected.end(), row.pattern_label) == expected.end()) {
      summary.mismatches.push_back(row.pattern_label);
    }
  }
  return summary;
}

}  // namespace partent
