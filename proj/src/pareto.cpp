#include "optimin/pareto.hpp"

#include <algorithm>
#include <numeric>

#include "optimin/error.hpp"

namespace optimin {

bool dominates(const ValueVector& q, const ValueVector& r) {
  bool strict = false;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] < r[i]) return false;
    if (q[i] > r[i]) strict = true;
  }
  return strict;
}

std::vector<std::size_t> pareto_filter(const std::vector<ValueVector>& values) {
  if (values.empty()) throw Error(ErrorKind::empty_input, "pareto_filter needs at least one point");
  const std::size_t dims = values.front().size();
  for (const auto& v : values)
    if (v.size() != dims) throw Error(ErrorKind::parameter, "value vectors differ in length");

  // Collapse duplicates: sort indices lexicographically descending by value.
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  std::vector<std::size_t> distinct;  // representatives, descending lex order
  std::vector<std::size_t> group_of(values.size());
  for (std::size_t idx : order) {
    if (distinct.empty() || values[distinct.back()] != values[idx]) distinct.push_back(idx);
    group_of[idx] = distinct.size() - 1;
  }

  // In descending lex order a dominator always precedes what it dominates.
  std::vector<bool> keep(distinct.size(), false);
  if (dims == 2) {
    bool seen = false;
    Rational best_second;
    for (std::size_t g = 0; g < distinct.size(); ++g) {
      const auto& v = values[distinct[g]];
      if (!seen || v[1] > best_second) {
        keep[g] = true;
        best_second = v[1];
        seen = true;
      }
    }
  } else {
    std::vector<std::size_t> front;
    for (std::size_t g = 0; g < distinct.size(); ++g) {
      const auto& v = values[distinct[g]];
      bool dominated = false;
      for (std::size_t f : front) {
        if (dominates(values[distinct[f]], v)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) {
        keep[g] = true;
        front.push_back(g);
      }
    }
  }

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (keep[group_of[i]]) out.push_back(i);
  return out;
}

}  // namespace optimin
