#include "bct/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace bct {

bool is_nondegenerate(const HiddenSubsetModel& h) {
  SubsetMask uni = 0, inter = full_mask(h.n);
  for (SubsetMask J : h.subsets) {
    uni |= J;
    inter &= J;
  }
  return uni == full_mask(h.n) && inter == 0;
}

bool satisfies_a1_a2(const CSISplitModel& c) {
  const SubsetMask all = full_mask(c.m);
  for (SubsetMask fb : c.first_blocks)
    if (fb == 0 || fb == all) return false;  // (A1)
  for (int l = 1; l <= c.m; ++l) {
    for (int l2 = l + 1; l2 <= c.m; ++l2) {
      bool separated = false;
      for (SubsetMask fb : c.first_blocks)
        if (contains(fb, l) != contains(fb, l2)) {
          separated = true;
          break;
        }
      if (!separated) return false;  // (A2)
    }
  }
  return true;
}

HiddenSubsetModel canonical_form(const HiddenSubsetModel& h) {
  std::vector<SubsetMask> best;
  for (const CubeSymmetry& g : cube_group(h.n)) {
    std::vector<SubsetMask> image;
    image.reserve(h.subsets.size());
    for (SubsetMask J : h.subsets) image.push_back(act_on_subset(g, J));
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = std::move(image);
  }
  return HiddenSubsetModel{h.n, std::move(best)};
}

namespace {

// For equal-size collections, lexicographic order on the sorted mask list is
// decided by the lowest differing subset: whichever collection contains it is
// smaller. Orbit images always have equal size, so canonicalization can work
// on bitset signatures directly.
inline bool sig_less_same_size(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  std::uint32_t low = (a ^ b) & -(a ^ b);
  return (a & low) != 0;
}

}  // namespace

Census classify(int n, CensusFilter filter, int m_lo, int m_hi, bool with_codim,
                std::uint64_t seed) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("classify: n must be at most 4 (2^(2^n) collections)");
  const int num_subsets = 1 << n;
  const std::uint32_t num_collections = std::uint32_t(1) << num_subsets;

  // Subset-permutation table per group element.
  std::vector<std::vector<std::uint8_t>> sub_map;
  for (const CubeSymmetry& g : cube_group(n)) {
    std::vector<std::uint8_t> row(num_subsets);
    for (SubsetMask J = 0; J < static_cast<SubsetMask>(num_subsets); ++J)
      row[J] = static_cast<std::uint8_t>(act_on_subset(g, J));
    sub_map.push_back(std::move(row));
  }

  auto passes = [&](std::uint32_t sig) {
    SubsetMask uni = 0, inter = full_mask(n);
    int m = 0;
    for (int j = 0; j < num_subsets; ++j) {
      if (sig & (std::uint32_t(1) << j)) {
        uni |= static_cast<SubsetMask>(j);
        inter &= static_cast<SubsetMask>(j);
        ++m;
      }
    }
    if (m < m_lo || m > m_hi) return false;
    if (filter == CensusFilter::none) return true;
    // nondegenerate == (A1); (A2) holds automatically for distinct subsets.
    return uni == full_mask(n) && inter == 0;
  };

  std::unordered_map<std::uint32_t, long long> orbit_count;
  long long filtered = 0;
  for (std::uint32_t sig = 1; sig < num_collections; ++sig) {
    if (!passes(sig)) continue;
    ++filtered;
    std::uint32_t best = sig;
    for (const auto& row : sub_map) {
      std::uint32_t img = 0;
      std::uint32_t rest = sig;
      while (rest) {
        int j = __builtin_ctz(rest);
        rest &= rest - 1;
        img |= std::uint32_t(1) << row[j];
      }
      if (sig_less_same_size(img, best)) best = img;
    }
    orbit_count[best] += 1;
  }

  Census census;
  census.n = n;
  census.filter = filter;
  census.m_lo = m_lo;
  census.m_hi = std::min<long long>(m_hi, num_subsets);
  census.total_collections = filtered;
  for (const auto& [sig, count] : orbit_count) {
    CensusOrbit orbit;
    for (int j = 0; j < num_subsets; ++j)
      if (sig & (std::uint32_t(1) << j))
        orbit.representative.push_back(static_cast<SubsetMask>(j));
    orbit.m = static_cast<int>(orbit.representative.size());
    orbit.orbit_size = count;
    census.orbits.push_back(std::move(orbit));
  }
  std::sort(census.orbits.begin(), census.orbits.end(),
            [](const CensusOrbit& a, const CensusOrbit& b) {
              if (a.m != b.m) return a.m < b.m;
              return a.representative < b.representative;
            });
  for (auto& orbit : census.orbits) {
    census.per_m[orbit.m] += 1;
    if (with_codim)
      orbit.codimension = model_codimension(HiddenSubsetModel{n, orbit.representative}, seed);
  }
  census.total_orbits = static_cast<long long>(census.orbits.size());
  return census;
}

}  // namespace bct
