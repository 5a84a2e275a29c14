#pragma once

// Exhaustive generators for PB_n and for PB-pairs, the substrate of every
// brute-force oracle in this project. Deterministic order: partitions are
// produced in lexicographic order of their canonical block lists.

#include <functional>
#include <optional>
#include <vector>

#include "pbm/partition.hpp"
#include "pbm/pb_pair.hpp"

namespace pbm {

struct EnumerationBounds {
  int max_n_full_monoid = 4;  // all_partitions allows up to this + 1
  int max_n_pb_pairs = 9;
  int max_n_cayley = 4;
  int max_table_size = 10000;
};

/// Visit every element of PB_n exactly once. Throws BoundError when n
/// exceeds the hard cap (bounds.max_n_full_monoid + 1).
void for_each_partition(int n, const std::function<void(const Partition&)>& fn,
                        const EnumerationBounds& bounds = {});

std::vector<Partition> all_partitions(int n, const EnumerationBounds& bounds = {});

/// Visit every PB-pair on [n] exactly once (all 1-2-equivalences, and for
/// each one every subset of its singleton classes as domain).
void for_each_pb_pair(int n, const std::function<void(const PBPair&)>& fn,
                      const EnumerationBounds& bounds = {});

std::vector<PBPair> all_pb_pairs(int n, const EnumerationBounds& bounds = {});

/// Subsequence of all_partitions matching every supplied filter.
std::vector<Partition> partitions_filtered(int n, std::optional<int> rank,
                                           std::optional<int> ker_singletons,
                                           std::optional<int> coker_singletons,
                                           const EnumerationBounds& bounds = {});

}  // namespace pbm
