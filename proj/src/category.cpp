#include "commacat/category.hpp"

#include <numeric>

namespace commacat {

namespace {
void check_rank(const ClassVector& a, const ClassVector& b) {
  if (a.rank() != b.rank()) throw ShapeMismatch("class vectors of different rank");
}
}  // namespace

bool ClassVector::is_zero() const {
  for (auto c : coords) {
    if (c != 0) return false;
  }
  return true;
}

std::int64_t ClassVector::total() const { return std::accumulate(coords.begin(), coords.end(), std::int64_t{0}); }

ClassVector operator+(const ClassVector& a, const ClassVector& b) {
  check_rank(a, b);
  ClassVector out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

ClassVector operator-(const ClassVector& a, const ClassVector& b) {
  check_rank(a, b);
  ClassVector out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

ClassVector operator*(std::int64_t s, const ClassVector& a) {
  ClassVector out = a;
  for (auto& c : out.coords) c *= s;
  return out;
}

ClassVector ClassVector::concat(const ClassVector& a, const ClassVector& b) {
  ClassVector out = a;
  out.coords.insert(out.coords.end(), b.coords.begin(), b.coords.end());
  return out;
}

std::string ClassVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords[i]);
  }
  return s + ")";
}

}  // namespace commacat
