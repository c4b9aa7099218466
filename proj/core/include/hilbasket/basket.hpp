#pragma once

#include <string>
#include <vector>

#include "hilbasket/singularity.hpp"

namespace hilbasket {

// Multiset of singularities; order carries no meaning.
using Basket = std::vector<Singularity>;

// Canonical representatives sorted by (r, min(a, dual a)).
Basket sorted_basket(const Basket& b);
bool same_basket(const Basket& x, const Basket& y);

// "{1/5(1,1), 1/15(1,2)}"; "{}" for the empty basket.
std::string to_string(const Basket& b);
// Comma-separated singularities, optionally wrapped in braces; blank text is the empty basket.
Basket parse_basket(const std::string& text);

}  // namespace hilbasket
