#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace infalg {

/// A subset of a finite universe {0..n-1}; the bitset size is the universe size.
using Subset = boost::dynamic_bitset<>;

/// Thrown when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an enumeration would exceed a configured bound.
class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline Subset make_subset(std::size_t n, std::initializer_list<std::size_t> members) {
  Subset s(n);
  for (auto m : members) {
    if (m >= n) throw InvalidArgument("subset member " + std::to_string(m) + " outside universe");
    s.set(m);
  }
  return s;
}

inline Subset make_subset(std::size_t n, std::span<const std::size_t> members) {
  Subset s(n);
  for (auto m : members) {
    if (m >= n) throw InvalidArgument("subset member " + std::to_string(m) + " outside universe");
    s.set(m);
  }
  return s;
}

inline Subset full_subset(std::size_t n) {
  Subset s(n);
  s.set();
  return s;
}

inline std::vector<std::size_t> members_of(const Subset& s) {
  std::vector<std::size_t> out;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

/// Subset whose bits are the low bits of `mask`; only for n <= 64.
inline Subset subset_from_mask(std::size_t n, unsigned long long mask) {
  Subset s(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1ULL) s.set(i);
  return s;
}

/// Renders as "{0,2,3}".
inline std::string to_string(const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace infalg
