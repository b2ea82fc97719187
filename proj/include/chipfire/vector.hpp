#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chipfire/errors.hpp"

namespace chipfire {

/// Index of a vertex. Non-sink vertices are 0..n-1 and the sink is n.
using Vertex = std::size_t;

/// Fixed-length integer vector tagged with its role, so that chip
/// configurations and firing scripts cannot be mixed up by accident.
/// Ordering is lexicographic; the containment order is `componentwise_le`.
template <typename Tag>
class IntVector {
 public:
  using value_type = std::int64_t;
  using container_type = std::vector<value_type>;
  using iterator = container_type::iterator;
  using const_iterator = container_type::const_iterator;

  IntVector() = default;
  explicit IntVector(std::size_t size, value_type fill = 0) : values_(size, fill) {}
  IntVector(std::initializer_list<value_type> values) : values_(values) {}
  explicit IntVector(container_type values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  value_type& operator[](std::size_t i) { return values_[i]; }
  value_type operator[](std::size_t i) const { return values_[i]; }

  iterator begin() noexcept { return values_.begin(); }
  iterator end() noexcept { return values_.end(); }
  const_iterator begin() const noexcept { return values_.begin(); }
  const_iterator end() const noexcept { return values_.end(); }

  std::span<const value_type> values() const noexcept { return values_; }
  const container_type& raw() const noexcept { return values_; }

  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend auto operator<=>(const IntVector&, const IntVector&) = default;

 private:
  container_type values_;
};

struct ConfigurationTag {};
struct ScriptTag {};

/// Chips on each non-sink vertex. Entries may be negative.
using Configuration = IntVector<ConfigurationTag>;
/// Number of times each non-sink vertex fires.
using Script = IntVector<ScriptTag>;

template <typename Tag>
std::int64_t weight(const IntVector<Tag>& v) {
  std::int64_t total = 0;
  for (auto x : v) total = detail::checked_add(total, x);
  return total;
}

template <typename Tag>
bool is_non_negative(const IntVector<Tag>& v) {
  for (auto x : v)
    if (x < 0) return false;
  return true;
}

template <typename Tag>
bool is_zero(const IntVector<Tag>& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

/// Containment order: a ⪯ b iff a_i <= b_i for every i.
template <typename Tag>
bool componentwise_le(const IntVector<Tag>& a, const IntVector<Tag>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("containment order on vectors of different length");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

template <typename Tag>
IntVector<Tag> operator+(const IntVector<Tag>& a, const IntVector<Tag>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("adding vectors of different length");
  IntVector<Tag> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = detail::checked_add(a[i], b[i]);
  return r;
}

template <typename Tag>
IntVector<Tag> operator-(const IntVector<Tag>& a, const IntVector<Tag>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("subtracting vectors of different length");
  IntVector<Tag> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = detail::checked_sub(a[i], b[i]);
  return r;
}

template <typename Tag>
IntVector<Tag> operator*(std::int64_t k, const IntVector<Tag>& v) {
  IntVector<Tag> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = detail::checked_mul(k, v[i]);
  return r;
}

/// Reinterprets the entries of one tagged vector as another role.
template <typename To, typename FromTag>
To retag(const IntVector<FromTag>& v) {
  return To(v.raw());
}

/// "(1,2,1,1)"
template <typename Tag>
std::string to_string(const IntVector<Tag>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace chipfire
