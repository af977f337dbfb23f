#pragma once

#include "immpoly/character.hpp"
#include "immpoly/partition.hpp"

namespace immpoly {

// Littlewood-Richardson coefficient c^lambda_{mu,nu}: the number of LR skew
// tableaux of shape lambda/mu and content nu (semistandard, reverse reading
// word a lattice word).  Requires weight(mu) + weight(nu) == weight(lambda);
// throws std::invalid_argument otherwise.  Returns 0 when mu is not
// contained in lambda.
Integer littlewood_richardson(const Partition& lam, const Partition& mu,
                              const Partition& nu);

}  // namespace immpoly
