#pragma once

#include <vector>

#include "annular/permutation.hpp"
#include "oracles.hpp"

namespace bridge {

inline oracle::Perm to_oracle(const annular::Permutation& p) {
  oracle::Perm out;
  for (int a : p.domain().labels()) out[a] = p(a);
  return out;
}

inline annular::Permutation from_oracle(const oracle::Perm& p, annular::GroundSet domain) {
  std::vector<int> images;
  for (int a : domain.labels()) images.push_back(p.at(a));
  return annular::Permutation::from_label_images(domain, images);
}

}  // namespace bridge
