#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace infalg {

enum class Verdict { pass, fail, not_applicable };

std::string_view to_string(Verdict v);

/// One named check with an optional counterexample. Witnesses are index
/// tuples into whatever the check quantifies over; `detail` says what.
struct Check {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::vector<std::size_t> witness;
  std::string detail;
  double millis = 0.0;

  bool passed() const { return verdict != Verdict::fail; }
};

/// Ordered list of checks; the overall verdict is their conjunction
/// (not-applicable checks are neutral).
class Report {
 public:
  Check& add(Check c);
  Check& pass(std::string name, std::string detail = {});
  Check& fail(std::string name, std::vector<std::size_t> witness, std::string detail = {});
  Check& not_applicable(std::string name, std::string detail);
  /// Adds a pass or fail depending on `ok`.
  Check& verdict(std::string name, bool ok, std::vector<std::size_t> witness = {}, std::string detail = {});

  /// Appends every check of `other`, prefixing names with `prefix.`.
  void merge(std::string_view prefix, const Report& other);

  bool passed() const;
  bool empty() const { return checks_.empty(); }
  const std::vector<Check>& checks() const { return checks_; }
  /// Throws std::out_of_range if no check has this name.
  const Check& at(std::string_view name) const;
  const Check* find(std::string_view name) const;
  bool has(std::string_view name) const { return find(name) != nullptr; }

 private:
  std::vector<Check> checks_;
};

}  // namespace infalg
