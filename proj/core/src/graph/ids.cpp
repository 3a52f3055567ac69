#include "ktsim/graph/ids.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ktsim/random.hpp"

namespace ktsim {

IdAssignment::IdAssignment(std::vector<IdValue> ids, IdValue space) : ids_(std::move(ids)) {
  by_id_.reserve(ids_.size());
  for (Vertex v = 0; v < ids_.size(); ++v) by_id_.emplace_back(ids_[v], v);
  std::sort(by_id_.begin(), by_id_.end());
  for (std::size_t i = 1; i < by_id_.size(); ++i)
    if (by_id_[i].first == by_id_[i - 1].first)
      throw std::invalid_argument("ID " + std::to_string(by_id_[i].first) + " assigned twice");
  const IdValue max_id = by_id_.empty() ? 0 : by_id_.back().first;
  space_ = space == 0 ? (by_id_.empty() ? 0 : max_id + 1) : space;
  if (!by_id_.empty() && max_id >= space_)
    throw std::invalid_argument("ID " + std::to_string(max_id) + " outside ID space");
}

IdAssignment IdAssignment::identity(std::size_t n) {
  std::vector<IdValue> ids(n);
  std::iota(ids.begin(), ids.end(), IdValue{0});
  return IdAssignment(std::move(ids), n);
}

IdAssignment IdAssignment::random(std::size_t n, std::uint64_t seed) {
  const IdValue space = std::max<IdValue>(n, static_cast<IdValue>(n) * n);
  Rng rng(mix_seed(seed, 0x1d5));
  // Floyd's sampling, then a shuffle so the order carries no structure.
  std::unordered_set<IdValue> chosen;
  std::vector<IdValue> ids;
  ids.reserve(n);
  for (IdValue j = space - n; j < space; ++j) {
    IdValue t = uniform_below(rng, j + 1);
    if (chosen.insert(t).second) {
      ids.push_back(t);
    } else {
      chosen.insert(j);
      ids.push_back(j);
    }
  }
  for (std::size_t i = ids.size(); i > 1; --i) std::swap(ids[i - 1], ids[uniform_below(rng, i)]);
  return IdAssignment(std::move(ids), space);
}

std::optional<Vertex> IdAssignment::vertex_of(IdValue id) const {
  auto it = std::lower_bound(by_id_.begin(), by_id_.end(), std::pair<IdValue, Vertex>{id, 0});
  if (it == by_id_.end() || it->first != id) return std::nullopt;
  return it->second;
}

}  // namespace ktsim
