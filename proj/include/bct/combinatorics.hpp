#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bct {

// A subset of [n] = {1,...,n}, encoded little-endian: element i <-> bit i-1.
// Every 2^n-length table in the library is indexed by this mask.
using SubsetMask = std::uint32_t;

inline int popcount(SubsetMask s) { return __builtin_popcount(s); }
inline bool contains(SubsetMask s, int element) { return (s >> (element - 1)) & 1u; }
inline SubsetMask single(int element) { return SubsetMask(1) << (element - 1); }
inline SubsetMask full_mask(int n) { return (SubsetMask(1) << n) - 1; }

std::vector<int> elements(SubsetMask s);  // ascending, 1-based

// "124" for {1,2,4}; "" for the empty set. Elements restricted to 1..6.
std::string subset_str(SubsetMask s);
// Parses a digit string; nullopt if malformed or any element exceeds n.
std::optional<SubsetMask> subset_from_str(const std::string& s, int n);

// Partition of a ground set into disjoint nonempty blocks. Blocks are keyed
// by their minimum element and stored sorted by that key.
struct SetPartition {
  std::vector<SubsetMask> blocks;
  bool operator==(const SetPartition&) const = default;
};

// Visits every set partition of `ground` exactly once (order unspecified).
// The empty ground set yields the single empty partition, so the empty
// moment product convention mu_emptyset = 1 falls out uniformly.
void for_each_set_partition(
    SubsetMask ground,
    const std::function<void(const std::vector<SubsetMask>&)>& visit);

// All partitions in canonical order: ascending block count, then
// lexicographic on the block-mask sequence. Count is Bell(|ground|).
std::vector<SetPartition> set_partitions(SubsetMask ground);

// Stirling numbers of the second kind; 0 outside 0 <= i <= nu.
long long stirling2(int nu, int i);
// Cyclically ordered set partitions of a nu-set into i blocks ("necklaces"):
// (i-1)! * stirling2(nu, i). Requires 1 <= i <= nu.
long long necklace_count(int nu, int i);
long long bell_number(int nu);

// Symmetry of the n-cube: permute coordinates, then flip the coordinates in
// `flip` (0 <-> 1 swap). The group has order n! * 2^n.
struct CubeSymmetry {
  std::vector<std::uint8_t> perm;  // perm[i-1] = image of element i, 1-based
  SubsetMask flip = 0;

  int n() const { return static_cast<int>(perm.size()); }
  bool operator==(const CubeSymmetry&) const = default;
};

SubsetMask permute_subset(const std::vector<std::uint8_t>& perm, SubsetMask I);

// sigma(I) xor J, with the fixed convention "permute first, then flip".
SubsetMask act_on_subset(const CubeSymmetry& g, SubsetMask I);

// act(compose(g,h), I) == act(g, act(h, I)) for all I.
CubeSymmetry compose(const CubeSymmetry& g, const CubeSymmetry& h);
CubeSymmetry inverse(const CubeSymmetry& g);
CubeSymmetry identity_symmetry(int n);

// All n! * 2^n elements; requires 1 <= n <= 6.
std::vector<CubeSymmetry> cube_group(int n);

}  // namespace bct
