#pragma once

#include <cstddef>
#include <vector>

#include "cycgrp/group.hpp"

namespace cycgrp {

/// Map between two table groups, images[a] = image of element a.
struct Morphism {
  std::size_t source_order = 0;
  std::size_t target_order = 0;
  std::vector<Elem> images;

  Elem operator()(Elem a) const { return images[a]; }
  bool operator==(const Morphism&) const = default;
};

Morphism identity_morphism(const Group& g);

bool is_homomorphism(const Group& source, const Group& target, const Morphism& m);
bool is_bijective(const Morphism& m);

/// first then second: (second o first)(a) = second(first(a)).
Morphism compose(const Morphism& first, const Morphism& second);

}  // namespace cycgrp
