#include "infalg/report.hpp"

#include <stdexcept>

namespace infalg {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "unknown";
}

Check& Report::add(Check c) {
  checks_.push_back(std::move(c));
  return checks_.back();
}

Check& Report::pass(std::string name, std::string detail) {
  return add(Check{std::move(name), Verdict::pass, {}, std::move(detail)});
}

Check& Report::fail(std::string name, std::vector<std::size_t> witness, std::string detail) {
  return add(Check{std::move(name), Verdict::fail, std::move(witness), std::move(detail)});
}

Check& Report::not_applicable(std::string name, std::string detail) {
  return add(Check{std::move(name), Verdict::not_applicable, {}, std::move(detail)});
}

Check& Report::verdict(std::string name, bool ok, std::vector<std::size_t> witness, std::string detail) {
  if (ok) return pass(std::move(name), std::move(detail));
  return fail(std::move(name), std::move(witness), std::move(detail));
}

void Report::merge(std::string_view prefix, const Report& other) {
  for (const auto& c : other.checks_) {
    Check copy = c;
    if (!prefix.empty()) copy.name = std::string(prefix) + "." + c.name;
    checks_.push_back(std::move(copy));
  }
}

bool Report::passed() const {
  for (const auto& c : checks_)
    if (!c.passed()) return false;
  return true;
}

const Check* Report::find(std::string_view name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

const Check& Report::at(std::string_view name) const {
  if (const auto* c = find(name)) return *c;
  throw std::out_of_range("no check named " + std::string(name));
}

}  // namespace infalg
