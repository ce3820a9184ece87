#include "homdist/permutation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace homdist {

bool is_permutation(const Permutation& p) {
  std::vector<char> hit(p.size(), 0);
  for (int img : p) {
    if (img < 0 || img >= static_cast<int>(p.size()) || hit[img]) return false;
    hit[img] = 1;
  }
  return true;
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Permutation compose_permutations(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("permutation size mismatch");
  Permutation out(a.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

Permutation inverse_permutation(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = static_cast<int>(x);
  return out;
}

bool is_identity(const Permutation& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != static_cast<int>(x)) return false;
  return true;
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

PermGroup make_perm_group(int degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  PermGroup group;
  group.degree = degree;
  group.elements = std::move(elements);

  // Greedy generating set: add an element when the closure so far misses it.
  // Large groups keep the whole element list as the (trivial) generating
  // sublist; the explicit list is the primary representation anyway.
  if (group.elements.size() > 4096) {
    group.generators = group.elements;
  } else {
    std::set<Permutation> closure{identity_permutation(degree)};
    for (const auto& el : group.elements) {
      if (closure.count(el)) continue;
      group.generators.push_back(el);
      // close under products with the new generator
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<Permutation> fresh;
        for (const auto& a : closure)
          for (const auto& gen : group.generators) {
            Permutation prod = compose_permutations(a, gen);
            if (!closure.count(prod)) fresh.push_back(std::move(prod));
          }
        for (auto& f : fresh)
          if (closure.insert(std::move(f)).second) grew = true;
      }
    }
  }
  return group;
}

}  // namespace homdist
