#include "mckay/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mckay/errors.hpp"

namespace mckay {

long long partition_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0LL);
}

std::vector<Partition> partitions(long long n) {
    if (n < 0) throw InvalidParameter("partition size must be nonnegative");
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, long long remaining, long long max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (long long part = std::min(max_part, remaining); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

AbacusState abacus_core_quotient(const Partition& lambda, long long ell) {
    if (ell < 1) throw InvalidParameter("abacus needs ell >= 1");
    AbacusState st;
    st.runners.assign((size_t)ell, {});

    // Beta-numbers on L beads, L a multiple of ell covering the partition.
    long long rows = (long long)lambda.size();
    long long L = ((rows / ell) + 2) * ell;
    std::vector<long long> beta;
    for (long long i = 0; i < L; ++i) {
        long long part = i < rows ? lambda[(size_t)i] : 0;
        beta.push_back(part + (L - 1 - i));
    }
    // Distribute onto runners; runner r keeps the levels (b - r)/ell.
    for (long long b : beta) st.runners[(size_t)(b % ell)].push_back(b / ell);
    for (auto& r : st.runners) std::sort(r.begin(), r.end(), std::greater<long long>());

    // Quotient: each runner's levels, read as beta-numbers, give one partition.
    st.quotient.assign((size_t)ell, {});
    for (long long r = 0; r < ell; ++r) {
        const auto& lv = st.runners[(size_t)r];
        long long count = (long long)lv.size();
        Partition q;
        for (long long i = 0; i < count; ++i) {
            long long part = lv[(size_t)i] - (count - 1 - i);
            if (part > 0) q.push_back(part);
        }
        st.quotient[(size_t)r] = q;
        st.quotient_size += partition_size(q);
    }
    // Core: push all beads down on their runner, reassemble beta-numbers.
    std::vector<long long> core_beta;
    for (long long r = 0; r < ell; ++r) {
        long long count = (long long)st.runners[(size_t)r].size();
        for (long long j = 0; j < count; ++j) core_beta.push_back(r + ell * j);
    }
    std::sort(core_beta.begin(), core_beta.end(), std::greater<long long>());
    for (long long i = 0; i < (long long)core_beta.size(); ++i) {
        long long part = core_beta[(size_t)i] - ((long long)core_beta.size() - 1 - i);
        if (part > 0) st.core.push_back(part);
    }
    if (partition_size(lambda) != partition_size(st.core) + ell * st.quotient_size)
        throw std::logic_error("abacus size identity violated");
    return st;
}

DimVec residue_character_natural(const Partition& lambda, long long ell) {
    if (ell < 1) throw InvalidParameter("residue character needs ell >= 1");
    DimVec d((size_t)ell, 0);
    for (long long row = 0; row < (long long)lambda.size(); ++row)
        for (long long col = 0; col < lambda[(size_t)row]; ++col) {
            long long res = (col - row) % ell;
            if (res < 0) res += ell;
            d[(size_t)res] += 1;
        }
    return d;
}

std::vector<int> natural_to_row(const GroupData& g) {
    if (g.spec.family != Family::Cyclic)
        throw InvalidParameter("natural character indexing applies to cyclic groups");
    const long long ell = g.spec.param;
    std::vector<int> perm((size_t)ell, -1);
    if (ell == 1) {
        perm[0] = 0;
        return perm;
    }
    // Class 1 is the class of the generator g; the character with value
    // zeta^j there is the natural exponent-j character.
    for (long long j = 0; j < ell; ++j) {
        CycNum want = CycNum::root_of_unity((int)ell, j);
        for (int row = 0; row < (int)g.table.size(); ++row)
            if (g.table[row][1] == want) {
                perm[(size_t)j] = row;
                break;
            }
        if (perm[(size_t)j] < 0) throw std::logic_error("cyclic character lookup failed");
    }
    return perm;
}

DimVec residue_character(const Partition& lambda, const GroupData& g) {
    const long long ell = g.spec.param;
    DimVec natural = residue_character_natural(lambda, ell);
    auto perm = natural_to_row(g);
    DimVec d((size_t)ell, 0);
    for (long long j = 0; j < ell; ++j) d[(size_t)perm[(size_t)j]] = natural[(size_t)j];
    return d;
}

long long core_count(long long ell, long long n) {
    long long count = 0;
    for (long long k = n % ell; k <= n; k += ell)
        for (const auto& c : partitions(k))
            if (abacus_core_quotient(c, ell).quotient_size == 0) ++count;
    return count;
}

CheckReport cyclic_cross_check(long long ell, long long n) {
    CheckReport rep;
    GroupModel model = build_model(GroupSpec::cyclic(ell));

    auto comps = enumerate_components(model.datum, n);
    std::set<DimVec> enumerated;
    for (const auto& c : comps) enumerated.insert(c.d);

    std::set<DimVec> from_partitions;
    bool weights_ok = true;
    std::string weight_detail;
    for (const auto& lam : partitions(n)) {
        DimVec d = residue_character(lam, model.group);
        from_partitions.insert(d);
        long long wt = weight(d, model.datum);
        long long qsize = abacus_core_quotient(lam, ell).quotient_size;
        if (wt != qsize) {
            weights_ok = false;
            weight_detail = "wt mismatch at partition of size " + std::to_string(n);
        }
    }
    rep.add("residue_set_equals_components", enumerated == from_partitions,
            enumerated == from_partitions
                ? ""
                : "enumerated " + std::to_string(enumerated.size()) + " vs partitions " +
                      std::to_string(from_partitions.size()));
    rep.add("weight_equals_ell_quotient_size", weights_ok, weight_detail);

    long long cores = core_count(ell, n);
    rep.add("component_count_equals_core_count", cores == (long long)comps.size(),
            "components " + std::to_string(comps.size()) + ", cores " + std::to_string(cores));

    // Sizes agree cell by cell.
    bool sizes_ok = true;
    for (const auto& lam : partitions(n))
        if (size_of(residue_character(lam, model.group), model.datum) != n) sizes_ok = false;
    rep.add("residue_size_equals_partition_size", sizes_ok);
    return rep;
}

} // namespace mckay
