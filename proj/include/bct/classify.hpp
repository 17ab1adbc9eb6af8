#pragma once

#include "bct/models.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace bct {

// True iff every coordinate i has some J in A with i in J and some J' with
// i not in J'; otherwise X_i is constant under some relabeling and the model
// splits off a factor.
bool is_nondegenerate(const HiddenSubsetModel& h);

// (A1): every split has two nonempty blocks. (A2): no two hidden classes lie
// in the same block of every split.
bool satisfies_a1_a2(const CSISplitModel& c);

// Lexicographically minimal sorted collection over all (permutation, flip)
// images; constant on hyperoctahedral orbits and idempotent.
HiddenSubsetModel canonical_form(const HiddenSubsetModel& h);

enum class CensusFilter { none, nondegenerate, a1a2 };

struct CensusOrbit {
  int m = 0;
  std::vector<SubsetMask> representative;  // canonical sorted collection
  long long orbit_size = 0;
  std::optional<int> codimension;
};

struct Census {
  int n = 0;
  CensusFilter filter = CensusFilter::none;
  int m_lo = 1, m_hi = 0;
  std::vector<CensusOrbit> orbits;      // sorted by (m, representative)
  std::map<int, long long> per_m;       // orbit counts per hidden-class count
  long long total_orbits = 0;
  long long total_collections = 0;      // filtered collections before orbit grouping
};

// Enumerates all nonempty collections A of subsets of [n], applies the
// filter, and groups them into hyperoctahedral orbits. Requires n <= 4
// (65,536 collections at n = 4; n = 5 would be 2^32).
Census classify(int n, CensusFilter filter, int m_lo = 1, int m_hi = 1 << 30,
                bool with_codim = false, std::uint64_t seed = 1);

}  // namespace bct
