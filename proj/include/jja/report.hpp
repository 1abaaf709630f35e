#pragma once

#include <string>
#include <vector>

namespace jja {

/// A failing basis-index tuple, optionally annotated.
struct Witness {
  std::vector<int> indices;
  std::string note;
};

struct Condition {
  std::string name;
  std::vector<Witness> failures;   // stored witnesses, capped by CheckOptions
  std::size_t failure_count = 0;   // true number of failures seen

  bool pass() const { return failure_count == 0; }
};

/// Per-condition verdicts of an axiom or compatibility check. Failures carry
/// witnesses instead of throwing; constructors that require validity consult
/// the report and throw on their own.
struct Report {
  std::vector<Condition> conditions;

  bool pass() const {
    for (const auto& c : conditions)
      if (!c.pass()) return false;
    return true;
  }
  const Condition* find(const std::string& name) const {
    for (const auto& c : conditions)
      if (c.name == name) return &c;
    return nullptr;
  }
  Condition& add(const std::string& name) {
    conditions.push_back(Condition{name, {}, 0});
    return conditions.back();
  }
  std::string summary() const;
};

struct CheckOptions {
  std::size_t max_witnesses = 8;  // per condition
  bool early_exit = false;        // stop the whole check at its first failure
};

/// Collects failures for one condition, honoring witness caps and early exit.
class ConditionSink {
 public:
  ConditionSink(Condition& cond, const CheckOptions& opts) : cond_(cond), opts_(opts) {}

  /// Record a failure; returns false when the overall check should stop.
  bool fail(std::initializer_list<int> idx, std::string note = {}) {
    ++cond_.failure_count;
    if (cond_.failures.size() < opts_.max_witnesses)
      cond_.failures.push_back(Witness{std::vector<int>(idx), std::move(note)});
    return !opts_.early_exit;
  }
  bool saw_failure() const { return cond_.failure_count > 0; }

 private:
  Condition& cond_;
  const CheckOptions& opts_;
};

}  // namespace jja
