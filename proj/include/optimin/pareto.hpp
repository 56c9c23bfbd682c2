#pragma once

#include <cstddef>
#include <vector>

#include "optimin/game.hpp"

namespace optimin {

/// q dominates r iff q >= r in every coordinate and q > r in at least one.
bool dominates(const ValueVector& q, const ValueVector& r);

/// Indices of the items whose value vector no other item dominates, in input
/// order. Items sharing a value are kept or dropped together. Throws
/// empty_input on an empty list.
std::vector<std::size_t> pareto_filter(const std::vector<ValueVector>& values);

/// Convenience wrapper returning the surviving items themselves.
template <class Item, class Key>
std::vector<Item> pareto_filter(const std::vector<Item>& items, Key key) {
  std::vector<ValueVector> values;
  values.reserve(items.size());
  for (const auto& item : items) values.push_back(key(item));
  std::vector<Item> out;
  for (std::size_t idx : pareto_filter(values)) out.push_back(items[idx]);
  return out;
}

}  // namespace optimin
