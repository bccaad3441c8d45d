#include "mckay/mckay_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mckay/errors.hpp"

namespace mckay {

McKayGraph mckay_graph(const GroupData& g) {
    const int n = (int)g.table.size();
    McKayGraph out;
    out.degrees = g.degrees;
    out.mult.assign(n, std::vector<long long>(n, 0));
    for (int a = 0; a < n; ++a) {
        // chi_a * chi_std expanded against each chi_b
        std::vector<CycNum> prod(g.num_classes());
        for (int c = 0; c < g.num_classes(); ++c) prod[c] = g.table[a][c] * g.std_values[c];
        for (int b = 0; b < n; ++b) {
            CycNum ip = g.inner_product(prod, g.table[b]);
            if (!ip.is_rational())
                throw NonIntegralMultiplicity("non-rational inner product at (" +
                                              std::to_string(a) + "," + std::to_string(b) + ")");
            Rational q = ip.rational_part_or_throw();
            if (!q.is_integer() || q.sign() < 0)
                throw NonIntegralMultiplicity("inner product " + q.str() + " at (" +
                                              std::to_string(a) + "," + std::to_string(b) + ")");
            out.mult[a][b] = q.as_integer();
        }
    }
    // Symmetry and the weighted handshake sum dim(X_std (x) X_chi) = 2 deg(chi).
    for (int a = 0; a < n; ++a) {
        long long row = 0;
        for (int b = 0; b < n; ++b) {
            if (out.mult[a][b] != out.mult[b][a])
                throw NonIntegralMultiplicity("multiplicity matrix not symmetric");
            row += out.mult[a][b] * out.degrees[b];
        }
        if (row != 2 * out.degrees[a])
            throw NonIntegralMultiplicity("McKay row sum mismatch at vertex " + std::to_string(a));
        // Self-loops appear only for the trivial group, where chi_std = 2 chi_0.
        if (out.mult[a][a] != 0 && n > 1)
            throw NonIntegralMultiplicity("unexpected self-loop at vertex " + std::to_string(a));
    }
    return out;
}

namespace {

long long x_to_int(const Rational& r, long long lcm_den) {
    return r.num() * (lcm_den / r.den());
}

// Primitive positive integer kernel vector of an integer matrix whose kernel
// is expected to be a line; exact rational elimination.
DimVec kernel_line(const std::vector<std::vector<long long>>& m) {
    const int n = (int)m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int p = -1;
        for (int i = row; i < n; ++i)
            if (!a[i][col].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[p], a[row]);
        Rational inv = Rational(1) / a[row][col];
        for (int j = 0; j < n; ++j) a[row][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (int j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if ((int)pivot_col.size() != n - 1)
        throw NotAffineADE("kernel is not one-dimensional (corank " +
                           std::to_string(n - (int)pivot_col.size()) + ")");
    // The unique free column parametrizes the kernel.
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    std::vector<Rational> v(n, Rational(0));
    v[free_col] = Rational(1);
    for (int i = 0; i < (int)pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free_col];

    // Scale to the primitive integer vector with positive entries.
    long long lcm_den = 1;
    for (const auto& x : v) lcm_den = std::lcm(lcm_den, x.den());
    std::vector<long long> w(n);
    long long g = 0;
    for (int i = 0; i < n; ++i) {
        w[i] = (x_to_int(v[i], lcm_den));
        g = std::gcd(g, std::llabs(w[i]));
    }
    if (g == 0) throw NotAffineADE("kernel vector vanished");
    for (auto& x : w) x /= g;
    int sgn = 0;
    for (long long x : w) {
        if (x != 0) { sgn = x > 0 ? 1 : -1; break; }
    }
    for (auto& x : w) x *= sgn;
    for (long long x : w)
        if (x <= 0) throw NotAffineADE("kernel vector not strictly positive");
    return w;
}

} // namespace

std::string RootDatum::type_label() const {
    switch (type) {
        case AffineType::A: return "A~" + std::to_string(type_rank);
        case AffineType::D: return "D~" + std::to_string(type_rank);
        case AffineType::E6: return "E~6";
        case AffineType::E7: return "E~7";
        case AffineType::E8: return "E~8";
    }
    return "?";
}

RootDatum affine_cartan(const McKayGraph& graph) {
    const int n = graph.num_vertices();
    RootDatum r;
    r.graph = graph;
    r.cartan.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.cartan[i][j] = (i == j ? 2 : 0) - graph.mult[i][j];

    r.delta = kernel_line(r.cartan);
    if (r.delta[0] != 1) throw NotAffineADE("delta is not 1 at the trivial character");
    for (int i = 0; i < n; ++i) {
        long long acc = 0;
        for (int j = 0; j < n; ++j) acc += r.cartan[i][j] * r.delta[j];
        if (acc != 0) throw NotAffineADE("A*delta is nonzero");
        if (r.delta[i] != graph.degrees[i])
            throw NotAffineADE("delta does not match the character degree at vertex " +
                               std::to_string(i));
    }

    r.finite_cartan.assign(n - 1, std::vector<long long>(n - 1, 0));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) r.finite_cartan[i - 1][j - 1] = r.cartan[i][j];
    // Positive definiteness of the finite block via leading principal minors.
    {
        std::vector<std::vector<Rational>> a(n - 1, std::vector<Rational>(n - 1));
        for (int i = 0; i + 1 < n; ++i)
            for (int j = 0; j + 1 < n; ++j) a[i][j] = Rational(r.finite_cartan[i][j]);
        Rational det(1);
        for (int k = 0; k + 1 < n; ++k) {
            if (a[k][k].is_zero()) {
                int p = -1;
                for (int i = k + 1; i + 1 < n; ++i)
                    if (!a[i][k].is_zero()) { p = i; break; }
                if (p < 0) throw NotAffineADE("finite Cartan block is singular");
                std::swap(a[p], a[k]);
                det = -det;
            }
            for (int i = k + 1; i + 1 < n; ++i) {
                Rational f = a[i][k] / a[k][k];
                for (int j = k; j + 1 < n; ++j) a[i][j] -= f * a[k][j];
            }
            det *= a[k][k];
            if (det.sign() <= 0) throw NotAffineADE("finite Cartan block not positive definite");
        }
    }

    // Type detection from (vertex count, degree sequence, max delta entry).
    long long max_delta = *std::max_element(r.delta.begin(), r.delta.end());
    std::vector<long long> graph_deg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) graph_deg[i] += graph.mult[i][j];
    long long max_graph_deg = n > 1 ? *std::max_element(graph_deg.begin(), graph_deg.end()) : 0;

    if (max_delta == 1) {
        r.type = AffineType::A;
        r.type_rank = n - 1;
    } else if (max_delta == 2 && max_graph_deg >= 3) {
        r.type = AffineType::D;
        r.type_rank = n - 1;
    } else if (max_delta == 3) {
        r.type = AffineType::E6;
        r.type_rank = 6;
        if (n != 7) throw NotAffineADE("E6 candidate with wrong vertex count");
    } else if (max_delta == 4) {
        r.type = AffineType::E7;
        r.type_rank = 7;
        if (n != 8) throw NotAffineADE("E7 candidate with wrong vertex count");
    } else if (max_delta == 6) {
        r.type = AffineType::E8;
        r.type_rank = 8;
        if (n != 9) throw NotAffineADE("E8 candidate with wrong vertex count");
    } else {
        throw NotAffineADE("unrecognized affine type (max delta " + std::to_string(max_delta) + ")");
    }

    // delta_fin^T C delta_fin = 2, a consequence of A delta = 0 (vacuous for
    // the one-vertex graph of the trivial group).
    if (n > 1) {
        long long acc = 0;
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) acc += r.delta[i] * r.cartan[i][j] * r.delta[j];
        if (acc != 2) throw NotAffineADE("finite block identity delta^T C delta != 2");
    }
    return r;
}

long long size_of(const DimVec& d, const RootDatum& r) {
    if ((int)d.size() != r.num_vertices()) throw DimensionMismatch("dimension vector length");
    long long s = 0;
    for (int i = 0; i < r.num_vertices(); ++i) s += r.delta[i] * d[i];
    return s;
}

std::string to_dot(const McKayGraph& graph) {
    std::ostringstream os;
    os << "graph mckay {\n";
    for (int i = 0; i < graph.num_vertices(); ++i) {
        os << "  v" << i << " [label=\"chi" << i << " (" << graph.degrees[i] << ")\"";
        if (i == 0) os << " shape=doublecircle";
        os << "];\n";
    }
    for (int i = 0; i < graph.num_vertices(); ++i)
        for (int j = i; j < graph.num_vertices(); ++j) {
            long long m = graph.mult[i][j];
            if (i == j) m /= 2; // a loop contributes twice to mult[i][i]
            if (m <= 0) continue;
            os << "  v" << i << " -- v" << j;
            if (m > 1) os << " [label=\"" << m << "\"]";
            os << ";\n";
        }
    os << "}\n";
    return os.str();
}

GroupModel build_model(const GroupSpec& spec) {
    GroupModel m;
    m.group = build_group(spec);
    m.datum = affine_cartan(mckay_graph(m.group));
    return m;
}

} // namespace mckay
