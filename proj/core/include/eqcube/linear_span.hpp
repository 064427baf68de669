#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "eqcube/rational.hpp"

namespace eqcube {

/// Exact Gaussian elimination over Q on sparse vectors indexed by Key.
///
/// Generators are added one at a time and kept in echelon form (each row has
/// a distinct pivot, its largest key, with coefficient 1). reduce() returns
/// the unique representative of v + span with zero entries at every pivot,
/// so it is linear and idempotent, together with coordinates c_i such that
/// v = remainder + sum_i c_i * generator_i.
template <class Key>
class SpanReducer {
 public:
  using Vector = std::map<Key, Rational>;

  struct Reduction {
    Vector remainder;
    std::vector<Rational> coordinates;  // one entry per generator added
  };

  /// Returns true when the generator enlarged the span.
  bool add(const Vector& generator) {
    const std::size_t index = generators_++;
    std::map<std::size_t, Rational> combo{{index, Rational(1)}};
    Vector v = generator;
    eliminate(v, combo);
    if (v.empty()) return false;
    const Key pivot = v.rbegin()->first;
    const Rational inv = 1 / v.rbegin()->second;
    for (auto& [k, c] : v) c *= inv;
    for (auto& [i, c] : combo) c *= inv;
    rows_.emplace(pivot, Row{std::move(v), std::move(combo)});
    return true;
  }

  Reduction reduce(const Vector& v) const {
    Reduction r;
    r.remainder = v;
    std::map<std::size_t, Rational> combo;
    eliminate(r.remainder, combo);
    // v = remainder - combo . generators
    r.coordinates.assign(generators_, Rational(0));
    for (const auto& [i, c] : combo) r.coordinates[i] = -c;
    return r;
  }

  bool contains(const Vector& v) const { return reduce(v).remainder.empty(); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t generators() const { return generators_; }

 private:
  struct Row {
    Vector entries;
    std::map<std::size_t, Rational> combo;
  };

  // Subtracts multiples of rows until no pivot key remains in v; combo
  // accumulates the generator combination that was added to v.
  void eliminate(Vector& v, std::map<std::size_t, Rational>& combo) const {
    auto it = v.end();
    while (it != v.begin()) {
      --it;
      auto row = rows_.find(it->first);
      if (row == rows_.end()) continue;
      const Key key = it->first;
      const Rational f = it->second;
      for (const auto& [k, c] : row->second.entries) {
        auto [slot, inserted] = v.try_emplace(k, Rational(0));
        slot->second -= f * c;
        if (slot->second == 0) v.erase(slot);
      }
      for (const auto& [i, c] : row->second.combo) {
        auto [slot, inserted] = combo.try_emplace(i, Rational(0));
        slot->second -= f * c;
        if (slot->second == 0) combo.erase(slot);
      }
      // Entries of the row are all <= key and the key itself was cancelled.
      it = v.lower_bound(key);
    }
  }

  std::map<Key, Row> rows_;
  std::size_t generators_ = 0;
};

}  // namespace eqcube
