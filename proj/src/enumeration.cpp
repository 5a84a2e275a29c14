#include "pbm/enumeration.hpp"

#include <algorithm>
#include <string>

namespace pbm {

namespace {

constexpr int kUnassigned = -2;

// Enumerates partner maps (partial matchings) on `size` points in
// lexicographic block-list order: the smallest unassigned point is first
// left alone, then paired with each larger unassigned point in turn.
void enumerate_matchings(std::vector<int>& partner, int from,
                         const std::function<void(const std::vector<int>&)>& fn) {
  int size = static_cast<int>(partner.size());
  int v = from;
  while (v < size && partner[static_cast<size_t>(v)] != kUnassigned) ++v;
  if (v == size) {
    fn(partner);
    return;
  }
  partner[static_cast<size_t>(v)] = Partition::npos;
  enumerate_matchings(partner, v + 1, fn);
  for (int w = v + 1; w < size; ++w) {
    if (partner[static_cast<size_t>(w)] != kUnassigned) continue;
    partner[static_cast<size_t>(v)] = w;
    partner[static_cast<size_t>(w)] = v;
    enumerate_matchings(partner, v + 1, fn);
    partner[static_cast<size_t>(w)] = kUnassigned;
  }
  partner[static_cast<size_t>(v)] = kUnassigned;
}

std::vector<std::vector<int>> partner_to_blocks(const std::vector<int>& partner, int n) {
  std::vector<std::vector<int>> blocks;
  int size = static_cast<int>(partner.size());
  auto label = [n](int v) { return v < n ? v + 1 : -(v - n + 1); };
  for (int v = 0; v < size; ++v) {
    int w = partner[static_cast<size_t>(v)];
    if (w != Partition::npos && w < v) continue;
    std::vector<int> block{label(v)};
    if (w != Partition::npos) block.push_back(label(w));
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& fn,
                        const EnumerationBounds& bounds) {
  if (n < 0) throw ValidationError("negative ground size");
  if (n > bounds.max_n_full_monoid + 1)
    throw BoundError("enumerating PB_" + std::to_string(n) + " exceeds the bound " +
                     std::to_string(bounds.max_n_full_monoid + 1));
  std::vector<int> partner(static_cast<size_t>(2 * n), kUnassigned);
  enumerate_matchings(partner, 0, [&](const std::vector<int>& pm) {
    fn(Partition::from_blocks(n, partner_to_blocks(pm, n)));
  });
}

std::vector<Partition> all_partitions(int n, const EnumerationBounds& bounds) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, bounds);
  return out;
}

void for_each_pb_pair(int n, const std::function<void(const PBPair&)>& fn,
                      const EnumerationBounds& bounds) {
  if (n < 0) throw ValidationError("negative ground size");
  if (n > bounds.max_n_pb_pairs)
    throw BoundError("enumerating PB-pairs on [" + std::to_string(n) +
                     "] exceeds the bound " + std::to_string(bounds.max_n_pb_pairs));
  std::vector<int> partner(static_cast<size_t>(n), kUnassigned);
  enumerate_matchings(partner, 0, [&](const std::vector<int>& pm) {
    std::vector<std::pair<int, int>> doubles;
    std::vector<int> singletons;
    for (int v = 0; v < n; ++v) {
      int w = pm[static_cast<size_t>(v)];
      if (w == Partition::npos)
        singletons.push_back(v + 1);
      else if (w > v)
        doubles.emplace_back(v + 1, w + 1);
    }
    int s = static_cast<int>(singletons.size());
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
      std::vector<int> domain;
      for (int i = 0; i < s; ++i)
        if (mask & (1u << i)) domain.push_back(singletons[static_cast<size_t>(i)]);
      fn(PBPair(n, doubles, domain));
    }
  });
}

std::vector<PBPair> all_pb_pairs(int n, const EnumerationBounds& bounds) {
  std::vector<PBPair> out;
  for_each_pb_pair(n, [&](const PBPair& p) { out.push_back(p); }, bounds);
  return out;
}

std::vector<Partition> partitions_filtered(int n, std::optional<int> rank,
                                           std::optional<int> ker_singletons,
                                           std::optional<int> coker_singletons,
                                           const EnumerationBounds& bounds) {
  std::vector<Partition> out;
  for_each_partition(
      n,
      [&](const Partition& p) {
        if (rank && rank_of(p) != *rank) return;
        if (ker_singletons || coker_singletons) {
          PartitionStats s = stats(p);
          if (ker_singletons && s.ker_singletons != *ker_singletons) return;
          if (coker_singletons && s.coker_singletons != *coker_singletons) return;
        }
        out.push_back(p);
      },
      bounds);
  return out;
}

}  // namespace pbm
