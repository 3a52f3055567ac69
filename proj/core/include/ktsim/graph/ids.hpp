#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ktsim/graph/graph.hpp"

namespace ktsim {

using IdValue = std::uint64_t;

/// Injective vertex -> ID map. IDs live in [0, space()).
class IdAssignment {
 public:
  IdAssignment() = default;

  /// Throws std::invalid_argument if two vertices share an ID or an ID is
  /// not below `space`. space == 0 means max(ids) + 1.
  explicit IdAssignment(std::vector<IdValue> ids, IdValue space = 0);

  /// ids[v] = v.
  static IdAssignment identity(std::size_t n);

  /// n distinct IDs drawn from [0, max(n, n^2)) by seed.
  static IdAssignment random(std::size_t n, std::uint64_t seed);

  std::size_t size() const { return ids_.size(); }
  IdValue space() const { return space_; }
  IdValue operator[](Vertex v) const { return ids_[v]; }
  std::span<const IdValue> values() const { return ids_; }

  std::optional<Vertex> vertex_of(IdValue id) const;

  friend bool operator==(const IdAssignment& a, const IdAssignment& b) {
    return a.ids_ == b.ids_ && a.space_ == b.space_;
  }

 private:
  std::vector<IdValue> ids_;
  std::vector<std::pair<IdValue, Vertex>> by_id_;
  IdValue space_ = 0;
};

}  // namespace ktsim
