#include "mckay/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

void check_vertex(int vertex, const RootDatum& r) {
    if (vertex < 0 || vertex >= r.num_vertices())
        throw InvalidParameter("vertex index out of range");
    if (r.cartan[vertex][vertex] != 2)
        throw InvalidParameter("vertex " + std::to_string(vertex) +
                               " carries no simple reflection");
}

} // namespace

DimVec reflect_dim(int vertex, const DimVec& d, const RootDatum& r) {
    check_vertex(vertex, r);
    if ((int)d.size() != r.num_vertices()) throw DimensionMismatch("dimension vector length");
    DimVec out = d;
    long long sum = 0;
    for (int j = 0; j < r.num_vertices(); ++j) sum += r.graph.mult[vertex][j] * d[j];
    out[vertex] = sum - d[vertex] + (vertex == 0 ? 1 : 0);
    return out;
}

StabilityVector reflect_theta(int vertex, const StabilityVector& theta, const RootDatum& r) {
    check_vertex(vertex, r);
    if ((int)theta.size() != r.num_vertices()) throw DimensionMismatch("stability vector length");
    StabilityVector out = theta;
    for (int j = 0; j < r.num_vertices(); ++j)
        if (j != vertex && r.graph.mult[vertex][j] != 0)
            out[j] = theta[j] + Rational(r.graph.mult[vertex][j]) * theta[vertex];
    out[vertex] = -theta[vertex];
    return out;
}

DeformationVector reflect_lambda(int vertex, const DeformationVector& lambda, const RootDatum& r) {
    check_vertex(vertex, r);
    if ((int)lambda.size() != r.num_vertices())
        throw DimensionMismatch("deformation vector length");
    DeformationVector out = lambda;
    for (int j = 0; j < r.num_vertices(); ++j)
        if (j != vertex && r.graph.mult[vertex][j] != 0)
            out[j] = lambda[j] + Rational(r.graph.mult[vertex][j]) * lambda[vertex];
    out[vertex] = -lambda[vertex];
    return out;
}

DimVec apply_word(const WeylWord& w, DimVec d, const RootDatum& r) {
    for (int v : w) d = reflect_dim(v, d, r);
    return d;
}

StabilityVector apply_word(const WeylWord& w, StabilityVector theta, const RootDatum& r) {
    for (int v : w) theta = reflect_theta(v, theta, r);
    return theta;
}

DeformationVector apply_word(const WeylWord& w, DeformationVector lambda, const RootDatum& r) {
    for (int v : w) lambda = reflect_lambda(v, lambda, r);
    return lambda;
}

long long weight(const DimVec& d, const RootDatum& r) {
    const int n = r.num_vertices();
    if ((int)d.size() != n) throw DimensionMismatch("dimension vector length");
    std::vector<long long> a(n - 1);
    for (int i = 1; i < n; ++i) a[i - 1] = d[i] - d[0] * r.delta[i];
    long long q = 0;
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j) q += a[i] * r.finite_cartan[i][j] * a[j];
    if (q % 2 != 0) throw std::logic_error("a^T C a is odd on the root lattice");
    return d[0] - q / 2;
}

long long default_witness_bound(const DimVec& d, const RootDatum& r) {
    long long size = 0, max_abs = 1;
    for (int i = 0; i < r.num_vertices(); ++i) {
        size += r.delta[i] * d[i];
        max_abs = std::max(max_abs, std::llabs(d[i]));
    }
    long long max_delta = *std::max_element(r.delta.begin(), r.delta.end());
    long long wt = weight(d, r);
    long long b = 4 * std::max({std::llabs(size), std::llabs(wt) * max_delta, max_abs, 1LL});
    return b;
}

namespace {

struct SearchSide {
    std::map<DimVec, std::pair<DimVec, int>> parent; // state -> (previous state, vertex)
    std::vector<DimVec> frontier;
};

WeylWord unwind(const SearchSide& side, DimVec state, const DimVec& origin) {
    WeylWord path;
    while (state != origin) {
        auto it = side.parent.find(state);
        path.push_back(it->second.second);
        state = it->second.first;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

WeylWord orbit_witness(const DimVec& d, const RootDatum& r, long long bound) {
    const long long wt = weight(d, r);
    DimVec target(r.num_vertices());
    for (int i = 0; i < r.num_vertices(); ++i) target[i] = wt * r.delta[i];
    if (d == target) return {};

    if (bound < 0) bound = default_witness_bound(d, r);
    std::vector<int> gens;
    for (int v = 0; v < r.num_vertices(); ++v)
        if (r.cartan[v][v] == 2) gens.push_back(v);
    if (gens.empty()) throw BoundExceeded("no simple reflections available");

    auto in_bound = [&](const DimVec& x) {
        for (long long c : x)
            if (std::llabs(c) > bound) return false;
        return true;
    };

    // Bidirectional BFS; generators are involutions, so both directions use
    // the same moves and a meeting state stitches the two half-words.
    SearchSide fwd, bwd;
    fwd.parent[d] = {d, -1};
    fwd.frontier = {d};
    bwd.parent[target] = {target, -1};
    bwd.frontier = {target};

    auto expand = [&](SearchSide& side, const SearchSide& other,
                      DimVec& meet) -> bool {
        std::vector<DimVec> next;
        for (const auto& state : side.frontier) {
            for (int v : gens) {
                DimVec img = reflect_dim(v, state, r);
                if (!in_bound(img) || side.parent.count(img)) continue;
                side.parent[img] = {state, v};
                if (other.parent.count(img)) {
                    meet = img;
                    return true;
                }
                next.push_back(std::move(img));
            }
        }
        side.frontier = std::move(next);
        return false;
    };

    if (fwd.parent.count(target)) return {};
    DimVec meet;
    while (!fwd.frontier.empty() || !bwd.frontier.empty()) {
        // Expand the smaller frontier first.
        bool pick_fwd = !fwd.frontier.empty() &&
                        (bwd.frontier.empty() || fwd.frontier.size() <= bwd.frontier.size());
        if (pick_fwd) {
            if (expand(fwd, bwd, meet)) {
                WeylWord head = unwind(fwd, meet, d);
                WeylWord tail = unwind(bwd, meet, target);
                std::reverse(tail.begin(), tail.end());
                head.insert(head.end(), tail.begin(), tail.end());
                return head;
            }
        } else {
            if (expand(bwd, fwd, meet)) {
                WeylWord head = unwind(fwd, meet, d);
                WeylWord tail = unwind(bwd, meet, target);
                std::reverse(tail.begin(), tail.end());
                head.insert(head.end(), tail.begin(), tail.end());
                return head;
            }
        }
    }
    throw BoundExceeded("orbit search exhausted at coefficient bound " + std::to_string(bound));
}

FiniteRoots finite_root_system(const RootDatum& r) {
    const int m = r.num_vertices() - 1;
    FiniteRoots out;
    if (m == 0) return out;

    std::set<std::vector<long long>> seen;
    std::vector<std::vector<long long>> frontier;
    for (int i = 0; i < m; ++i) {
        std::vector<long long> e(m, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& v : frontier) {
            for (int i = 0; i < m; ++i) {
                long long pairing = 0;
                for (int j = 0; j < m; ++j) pairing += r.finite_cartan[i][j] * v[j];
                auto img = v;
                img[i] -= pairing;
                if (seen.insert(img).second) next.push_back(img);
            }
        }
        frontier = std::move(next);
    }
    out.roots.assign(seen.begin(), seen.end());
    for (const auto& v : out.roots) {
        bool nonneg = true;
        for (long long c : v) nonneg = nonneg && c >= 0;
        if (nonneg) out.positive.push_back(v);
    }
    // Highest root: the componentwise-maximal positive root.
    out.highest = out.positive.front();
    for (const auto& v : out.positive) {
        long long ha = std::accumulate(out.highest.begin(), out.highest.end(), 0LL);
        long long hv = std::accumulate(v.begin(), v.end(), 0LL);
        if (hv > ha) out.highest = v;
    }
    for (const auto& v : out.positive)
        for (int i = 0; i < m; ++i)
            if (v[i] > out.highest[i])
                throw std::logic_error("highest root is not componentwise maximal");
    return out;
}

Rational eval_theta(const StabilityVector& theta, const DimVec& d) {
    if (theta.size() != d.size()) throw DimensionMismatch("theta/dimension length");
    Rational s(0);
    for (size_t i = 0; i < d.size(); ++i) s += theta[i] * Rational(d[i]);
    return s;
}

Rational theta_of_delta(const StabilityVector& theta, const RootDatum& r) {
    return eval_theta(theta, r.delta);
}

} // namespace mckay
