#include "bct/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace bct {

std::vector<int> elements(SubsetMask s) {
  std::vector<int> out;
  for (int i = 1; s; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

std::string subset_str(SubsetMask s) {
  std::string out;
  for (int e : elements(s)) out += static_cast<char>('0' + e);
  return out;
}

std::optional<SubsetMask> subset_from_str(const std::string& s, int n) {
  SubsetMask m = 0;
  int prev = 0;
  for (char c : s) {
    if (c < '1' || c > '9') return std::nullopt;
    int e = c - '0';
    if (e <= prev || e > n) return std::nullopt;  // strictly increasing digits
    m |= single(e);
    prev = e;
  }
  return m;
}

void for_each_set_partition(
    SubsetMask ground,
    const std::function<void(const std::vector<SubsetMask>&)>& visit) {
  std::vector<int> elems = elements(ground);
  std::vector<SubsetMask> blocks;
  // Restricted-growth recursion: element j joins an existing block or opens
  // a new one.
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == elems.size()) {
      visit(blocks);
      return;
    }
    SubsetMask bit = single(elems[j]);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= bit;
      rec(j + 1);
      blocks[b] &= ~bit;
    }
    blocks.push_back(bit);
    rec(j + 1);
    blocks.pop_back();
  };
  rec(0);
}

std::vector<SetPartition> set_partitions(SubsetMask ground) {
  std::vector<SetPartition> out;
  for_each_set_partition(ground, [&](const std::vector<SubsetMask>& blocks) {
    SetPartition p{blocks};
    // Blocks are already keyed by minimum element in creation order; sort to
    // the documented canonical block order.
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](SubsetMask a, SubsetMask b) { return (a & -a) < (b & -b); });
    out.push_back(std::move(p));
  });
  std::sort(out.begin(), out.end(),
            [](const SetPartition& a, const SetPartition& b) {
              if (a.blocks.size() != b.blocks.size())
                return a.blocks.size() < b.blocks.size();
              return a.blocks < b.blocks;
            });
  return out;
}

long long stirling2(int nu, int i) {
  if (i < 0 || i > nu || nu < 0) return 0;
  if (nu == 0) return i == 0 ? 1 : 0;
  // S(nu,i) = i*S(nu-1,i) + S(nu-1,i-1)
  std::vector<long long> row(nu + 1, 0);
  row[0] = 1;
  for (int r = 1; r <= nu; ++r) {
    for (int c = std::min(r, nu); c >= 1; --c)
      row[c] = c * row[c] + row[c - 1];
    row[0] = 0;  // S(r, 0) = 0 for r >= 1
  }
  return row[i];
}

long long necklace_count(int nu, int i) {
  if (i < 1 || i > nu) throw std::invalid_argument("necklace_count: need 1 <= i <= nu");
  long long f = 1;
  for (int j = 2; j < i; ++j) f *= j;
  return f * stirling2(nu, i);
}

long long bell_number(int nu) {
  long long b = 0;
  for (int i = 0; i <= nu; ++i) b += stirling2(nu, i);
  return b;
}

SubsetMask permute_subset(const std::vector<std::uint8_t>& perm, SubsetMask I) {
  SubsetMask out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (I & (SubsetMask(1) << i)) out |= SubsetMask(1) << (perm[i] - 1);
  return out;
}

SubsetMask act_on_subset(const CubeSymmetry& g, SubsetMask I) {
  return permute_subset(g.perm, I) ^ g.flip;
}

CubeSymmetry compose(const CubeSymmetry& g, const CubeSymmetry& h) {
  // act(g, act(h, I)) = sigma_g(sigma_h(I) ^ J_h) ^ J_g
  //                   = (sigma_g . sigma_h)(I) ^ sigma_g(J_h) ^ J_g.
  CubeSymmetry out;
  out.perm.resize(g.perm.size());
  for (std::size_t i = 0; i < h.perm.size(); ++i)
    out.perm[i] = g.perm[h.perm[i] - 1];
  out.flip = permute_subset(g.perm, h.flip) ^ g.flip;
  return out;
}

CubeSymmetry inverse(const CubeSymmetry& g) {
  CubeSymmetry out;
  out.perm.resize(g.perm.size());
  for (std::size_t i = 0; i < g.perm.size(); ++i)
    out.perm[g.perm[i] - 1] = static_cast<std::uint8_t>(i + 1);
  out.flip = permute_subset(out.perm, g.flip);
  return out;
}

CubeSymmetry identity_symmetry(int n) {
  CubeSymmetry g;
  g.perm.resize(n);
  for (int i = 0; i < n; ++i) g.perm[i] = static_cast<std::uint8_t>(i + 1);
  g.flip = 0;
  return g;
}

std::vector<CubeSymmetry> cube_group(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("cube_group: need 1 <= n <= 6");
  std::vector<std::uint8_t> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = static_cast<std::uint8_t>(i + 1);
  std::vector<CubeSymmetry> out;
  out.reserve(1u << n);
  do {
    for (SubsetMask flip = 0; flip < (SubsetMask(1) << n); ++flip)
      out.push_back(CubeSymmetry{perm, flip});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace bct
