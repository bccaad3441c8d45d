#pragma once

#include <vector>

#include "mckay/components.hpp"
#include "mckay/group.hpp"
#include "mckay/report.hpp"

namespace mckay {

// Weakly decreasing positive parts; the empty vector is the zero partition.
using Partition = std::vector<long long>;

long long partition_size(const Partition& p);

// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions(long long n);

struct AbacusState {
    std::vector<std::vector<long long>> runners; // bead levels per runner
    Partition core;
    std::vector<Partition> quotient;
    long long quotient_size = 0; // sum of the quotient sizes
};

// First-column-hook / beta-number abacus; |lambda| = |core| + l * quotient_size.
AbacusState abacus_core_quotient(const Partition& lambda, long long ell);

// Multiplicity vector of C[x,y]/I_lambda as a representation of the order-l
// cyclic group, in natural character-exponent indexing: entry j counts cells
// with (col - row) = j mod l. Convention pinned by lambda=(1) -> e_{chi_0}.
DimVec residue_character_natural(const Partition& lambda, long long ell);

// Same, permuted to the canonical row indexing of the given cyclic group.
DimVec residue_character(const Partition& lambda, const GroupData& cyclic_group);

// Row index of the character with value zeta_l^j on the generator class,
// for j = 0..l-1.
std::vector<int> natural_to_row(const GroupData& cyclic_group);

// The combinatorial oracle: checks component enumeration, the weight
// statistic and the component count against brute-force partition data.
CheckReport cyclic_cross_check(long long ell, long long n);

// Number of l-cores c with |c| <= n and |c| = n mod l.
long long core_count(long long ell, long long n);

} // namespace mckay
