#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abundant/factored.hpp"
#include "abundant/generators.hpp"

namespace abundant {

enum class Population { SA, XA, CA };

std::string to_string(Population p);
Population parse_population(std::string_view text);

struct PropertyInfo {
  std::string id;
  std::string statement;
  Population natural;    // the population the claim is made for
  bool large_enough;     // claim only for large enough n
  std::string filter;    // condition restricting which units are checked
};

const std::vector<PropertyInfo>& property_registry();

struct PropertyViolation {
  std::size_t index;  // 1-based position in the population (later element for pairs)
  std::string subject;
  std::string detail;
};

/// Outcome of one property over a population. Units are entries for
/// pointwise claims and consecutive pairs for the others, so
/// pass_count + violations + filtered_count = unit_count.
struct PropertyReport {
  std::string property_id;
  std::string population;
  std::string condition_filter;
  std::size_t unit_count = 0;
  std::size_t pass_count = 0;
  std::size_t filtered_count = 0;
  std::vector<PropertyViolation> violations;
  bool large_enough = false;
  /// For large-enough claims: the index from which every unit holds, i.e.
  /// one past the last violation. Empty if the last unit itself fails.
  std::optional<std::size_t> first_hold_index;
  /// Population extends past the range the claim was checked on in print.
  bool exploratory = false;

  /// No violations, or for large-enough claims a nonempty passing tail.
  bool holds() const;
};

/// Runs property `id` over an ascending population (entries of one kind,
/// starting with the first member of that kind for index-based filters).
/// DomainError for an unknown id; PrecisionExhausted if a comparison cannot
/// be settled.
PropertyReport run_property(const std::string& id, const std::vector<FactoredNumber>& population,
                            Population kind, std::optional<double> horizon = std::nullopt);

struct RemarkCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RemarkReport {
  std::vector<RemarkCheck> checks;
  bool all_passed() const;
};

/// Reproduces the worked examples around the XA and SA remarks: the triple
/// n1 < n2 < n3, the SA counterexamples s47/s48 and s173/s174, the SA
/// numbers between 10080 and 11 * 10080, the absence of an XA with largest
/// prime 149, and the f values of 5040, 10080, 55440. Needs a classified SA
/// list from 1 with horizon past log n3; HorizonInsufficient otherwise.
RemarkReport replicate_remarks(const ClassifiedList& sa);

}  // namespace abundant
