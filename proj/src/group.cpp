#include "mckay/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mckay/errors.hpp"

namespace mckay {

GroupSpec GroupSpec::parse(const std::string& text) {
    if (text == "2T") return {Family::BinaryTetrahedral, 0};
    if (text == "2O") return {Family::BinaryOctahedral, 0};
    if (text == "2I") return {Family::BinaryIcosahedral, 0};
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::string head = text.substr(0, colon);
        long long value = 0;
        try {
            size_t pos = 0;
            value = std::stoll(text.substr(colon + 1), &pos);
            if (pos != text.size() - colon - 1) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw InvalidParameter("cannot parse group parameter in '" + text + "'");
        }
        if (head == "cyclic") {
            if (value < 1) throw InvalidParameter("cyclic order must be >= 1");
            return GroupSpec::cyclic(value);
        }
        if (head == "bd") {
            if (value < 2) throw InvalidParameter("binary dihedral parameter must be >= 2");
            return GroupSpec::binary_dihedral(value);
        }
    }
    throw InvalidParameter("unknown group spec '" + text + "' (expected cyclic:<l>, bd:<m>, 2T, 2O, 2I)");
}

long long GroupSpec::order() const {
    switch (family) {
        case Family::Cyclic: return param;
        case Family::BinaryDihedral: return 4 * param;
        case Family::BinaryTetrahedral: return 24;
        case Family::BinaryOctahedral: return 48;
        case Family::BinaryIcosahedral: return 120;
    }
    return 0;
}

std::string GroupSpec::str() const {
    switch (family) {
        case Family::Cyclic: return "cyclic:" + std::to_string(param);
        case Family::BinaryDihedral: return "bd:" + std::to_string(param);
        case Family::BinaryTetrahedral: return "2T";
        case Family::BinaryOctahedral: return "2O";
        case Family::BinaryIcosahedral: return "2I";
    }
    return "?";
}

CycNum GroupData::inner_product(const std::vector<CycNum>& a, const std::vector<CycNum>& b) const {
    CycNum sum;
    for (int c = 0; c < num_classes(); ++c)
        sum += CycNum(Rational(classes[c].size)) * a[c] * b[c].conj();
    return sum * CycNum(Rational(1, order));
}

CycNum GroupData::inner_product_rows(int a, int b) const {
    return inner_product(table[a], table[b]);
}

namespace {

// Sorts rows canonically: trivial character first, then ascending degree,
// ties by lexicographic comparison of reduced value sequences. Keeps the
// standard-row marker in sync.
void canonical_sort(GroupData& g, int std_row_before) {
    const int n = g.num_classes();
    std::vector<int> perm(g.table.size());
    std::iota(perm.begin(), perm.end(), 0);
    auto is_trivial = [&](int r) {
        for (int c = 0; c < n; ++c)
            if (!(g.table[r][c] == CycNum(1))) return false;
        return true;
    };
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        if (g.degrees[a] != g.degrees[b]) return g.degrees[a] < g.degrees[b];
        for (int c = 0; c < n; ++c) {
            int cmp = CycNum::compare(g.table[a][c], g.table[b][c]);
            if (cmp != 0) return cmp < 0;
        }
        return false;
    });
    std::vector<std::vector<CycNum>> table;
    std::vector<long long> degrees;
    for (size_t i = 0; i < perm.size(); ++i) {
        table.push_back(std::move(g.table[perm[i]]));
        degrees.push_back(g.degrees[perm[i]]);
        if (std_row_before >= 0 && perm[i] == std_row_before) g.std_row = (int)i;
    }
    g.table = std::move(table);
    g.degrees = std::move(degrees);
}

GroupData build_cyclic(long long ell) {
    GroupData g;
    g.spec = GroupSpec::cyclic(ell);
    g.order = ell;
    const int N = (int)ell;
    for (long long k = 0; k < ell; ++k) {
        ConjClass cc;
        cc.label = (k == 0) ? "1" : ("g^" + std::to_string(k));
        cc.size = 1;
        cc.inverse_class = (int)((ell - k) % ell);
        g.classes.push_back(cc);
        g.square_class.push_back((int)((2 * k) % ell));
    }
    for (long long j = 0; j < ell; ++j) {
        std::vector<CycNum> row;
        for (long long k = 0; k < ell; ++k) row.push_back(CycNum::root_of_unity(N, j * k));
        g.table.push_back(std::move(row));
        g.degrees.push_back(1);
    }
    for (long long k = 0; k < ell; ++k)
        g.std_values.push_back(CycNum::root_of_unity(N, k) + CycNum::root_of_unity(N, -k));
    g.std_row.reset(); // reducible for every cyclic group
    canonical_sort(g, -1);
    return g;
}

GroupData build_binary_dihedral(long long m) {
    GroupData g;
    g.spec = GroupSpec::binary_dihedral(m);
    g.order = 4 * m;
    const int N = (int)std::lcm(2 * m, (long long)4);
    const bool m_even = (m % 2 == 0);

    // classes: 1, -1, a^k (k = 1..m-1), b, ab
    g.classes.push_back({"1", 1, 0});
    g.classes.push_back({"-1", 1, 1});
    for (long long k = 1; k < m; ++k)
        g.classes.push_back({"a^" + std::to_string(k), 2, (int)(1 + k)});
    int bi = (int)(m + 1), abi = (int)(m + 2);
    g.classes.push_back({"b", m, m_even ? bi : abi});
    g.classes.push_back({"ab", m, m_even ? abi : bi});

    auto a_power_class = [&](long long j) -> int {
        j %= 2 * m;
        if (j < 0) j += 2 * m;
        long long jj = std::min(j, 2 * m - j);
        if (jj == 0) return 0;
        if (jj == m) return 1;
        return (int)(1 + jj);
    };
    g.square_class.push_back(0); // 1
    g.square_class.push_back(0); // (-1)^2 = 1
    for (long long k = 1; k < m; ++k) g.square_class.push_back(a_power_class(2 * k));
    g.square_class.push_back(1); // b^2 = a^m = -1
    g.square_class.push_back(1); // (ab)^2 = b^2

    const int nc = g.num_classes();
    auto zeta2m = [&](long long e) { return CycNum::root_of_unity(N, e * (N / (2 * m))); };
    CycNum i_unit = CycNum::root_of_unity(N, N / 4);

    // 1-dim characters: psi(a), psi(b) with psi(b)^2 = psi(a)^m
    auto one_dim = [&](const CycNum& pa, const CycNum& pb) {
        std::vector<CycNum> row(nc);
        row[0] = CycNum(1);
        CycNum pam = CycNum(1);
        for (long long t = 0; t < m; ++t) pam *= pa;
        row[1] = pam;
        for (long long k = 1; k < m; ++k) {
            CycNum pak = CycNum(1);
            for (long long t = 0; t < k; ++t) pak *= pa;
            row[1 + k] = pak;
        }
        row[bi] = pb;
        row[abi] = pa * pb;
        return row;
    };
    g.table.push_back(one_dim(CycNum(1), CycNum(1)));
    g.degrees.push_back(1);
    g.table.push_back(one_dim(CycNum(1), CycNum(-1)));
    g.degrees.push_back(1);
    CycNum beta = m_even ? CycNum(1) : i_unit;
    g.table.push_back(one_dim(CycNum(-1), beta));
    g.degrees.push_back(1);
    g.table.push_back(one_dim(CycNum(-1), -beta));
    g.degrees.push_back(1);

    // 2-dim characters chi_j, j = 1..m-1
    int std_index = -1;
    for (long long j = 1; j < m; ++j) {
        std::vector<CycNum> row(nc);
        row[0] = CycNum(2);
        row[1] = zeta2m(j * m) + zeta2m(-j * m);
        for (long long k = 1; k < m; ++k) row[1 + k] = zeta2m(j * k) + zeta2m(-j * k);
        row[bi] = CycNum(0);
        row[abi] = CycNum(0);
        if (j == 1) {
            g.std_values = row;
            std_index = (int)g.table.size();
        }
        g.table.push_back(std::move(row));
        g.degrees.push_back(2);
    }
    canonical_sort(g, std_index);
    return g;
}

// --- embedded exceptional table assets (v1) ---------------------------------
// Entries are term lists (num, den, exp) over the stated conductor. The
// tables are re-validated by the orthogonality checks at load time.

struct AssetTerm {
    long long num, den;
    int exp;
};
using AssetCell = std::vector<AssetTerm>;

struct ExceptionalAsset {
    int conductor;
    std::vector<ConjClass> classes;
    std::vector<int> square_class;
    std::vector<std::vector<AssetCell>> rows;
    std::vector<long long> degrees;
    int std_row;
};

CycNum cell_value(int conductor, const AssetCell& cell) {
    CycNum v;
    for (const auto& t : cell)
        v += CycNum(Rational(t.num, t.den)) * CycNum::root_of_unity(conductor, t.exp);
    return v;
}

const AssetCell Z = {};                    // 0
AssetCell ints(long long n) { return {{n, 1, 0}}; }

ExceptionalAsset asset_2T() {
    // conductor 12; w = zeta_12^4 is a primitive cube root of unity
    AssetCell w = {{1, 1, 4}}, w2 = {{1, 1, 8}};
    AssetCell mw = {{-1, 1, 4}}, mw2 = {{-1, 1, 8}};
    ExceptionalAsset a;
    a.conductor = 12;
    a.classes = {{"1", 1, 0}, {"-1", 1, 1}, {"4A", 6, 2}, {"3A", 4, 4},
                 {"3B", 4, 3}, {"6A", 4, 6}, {"6B", 4, 5}};
    a.square_class = {0, 0, 1, 4, 3, 4, 3};
    a.rows = {
        {ints(1), ints(1), ints(1), ints(1), ints(1), ints(1), ints(1)},
        {ints(1), ints(1), ints(1), w, w2, w, w2},
        {ints(1), ints(1), ints(1), w2, w, w2, w},
        {ints(2), ints(-2), Z, ints(-1), ints(-1), ints(1), ints(1)},
        {ints(2), ints(-2), Z, mw, mw2, w, w2},
        {ints(2), ints(-2), Z, mw2, mw, w2, w},
        {ints(3), ints(3), ints(-1), Z, Z, Z, Z},
    };
    a.degrees = {1, 1, 1, 2, 2, 2, 3};
    a.std_row = 3;
    return a;
}

ExceptionalAsset asset_2O() {
    // conductor 24; sqrt(2) = zeta_24^3 - zeta_24^9
    AssetCell rt2 = {{1, 1, 3}, {-1, 1, 9}};
    AssetCell mrt2 = {{-1, 1, 3}, {1, 1, 9}};
    ExceptionalAsset a;
    a.conductor = 24;
    a.classes = {{"1", 1, 0}, {"-1", 1, 1}, {"8A", 6, 2}, {"8B", 6, 3},
                 {"6A", 8, 4}, {"3A", 8, 5}, {"4A", 6, 6}, {"4B", 12, 7}};
    a.square_class = {0, 0, 6, 6, 5, 5, 1, 1};
    a.rows = {
        {ints(1), ints(1), ints(1), ints(1), ints(1), ints(1), ints(1), ints(1)},
        {ints(1), ints(1), ints(-1), ints(-1), ints(1), ints(1), ints(1), ints(-1)},
        {ints(2), ints(-2), rt2, mrt2, ints(1), ints(-1), Z, Z},
        {ints(2), ints(-2), mrt2, rt2, ints(1), ints(-1), Z, Z},
        {ints(2), ints(2), Z, Z, ints(-1), ints(-1), ints(2), Z},
        {ints(3), ints(3), ints(-1), ints(-1), Z, Z, ints(-1), ints(1)},
        {ints(3), ints(3), ints(1), ints(1), Z, Z, ints(-1), ints(-1)},
        {ints(4), ints(-4), Z, Z, ints(-1), ints(1), Z, Z},
    };
    a.degrees = {1, 1, 2, 2, 2, 3, 3, 4};
    a.std_row = 2;
    return a;
}

ExceptionalAsset asset_2I() {
    // conductor 60; r = zeta_5 + zeta_5^4, s = zeta_5^2 + zeta_5^3
    AssetCell r = {{1, 1, 12}, {1, 1, 48}};
    AssetCell s = {{1, 1, 24}, {1, 1, 36}};
    AssetCell mr = {{-1, 1, 12}, {-1, 1, 48}};
    AssetCell ms = {{-1, 1, 24}, {-1, 1, 36}};
    ExceptionalAsset a;
    a.conductor = 60;
    a.classes = {{"1", 1, 0},    {"-1", 1, 1},  {"4A", 30, 2}, {"3A", 20, 3}, {"6A", 20, 4},
                 {"5A", 12, 5},  {"5B", 12, 6}, {"10A", 12, 7}, {"10B", 12, 8}};
    a.square_class = {0, 0, 1, 3, 3, 6, 5, 6, 5};
    a.rows = {
        {ints(1), ints(1), ints(1), ints(1), ints(1), ints(1), ints(1), ints(1), ints(1)},
        {ints(2), ints(-2), Z, ints(-1), ints(1), r, s, mr, ms},
        {ints(2), ints(-2), Z, ints(-1), ints(1), s, r, ms, mr},
        {ints(3), ints(3), ints(-1), Z, Z, ms, mr, ms, mr},
        {ints(3), ints(3), ints(-1), Z, Z, mr, ms, mr, ms},
        {ints(4), ints(-4), Z, ints(1), ints(-1), ints(-1), ints(-1), ints(1), ints(1)},
        {ints(4), ints(4), Z, ints(1), ints(1), ints(-1), ints(-1), ints(-1), ints(-1)},
        {ints(5), ints(5), ints(1), ints(-1), ints(-1), Z, Z, Z, Z},
        {ints(6), ints(-6), Z, Z, Z, ints(1), ints(1), ints(-1), ints(-1)},
    };
    a.degrees = {1, 2, 2, 3, 3, 4, 4, 5, 6};
    a.std_row = 1;
    return a;
}

GroupData build_exceptional(const GroupSpec& spec, const ExceptionalAsset& a) {
    GroupData g;
    g.spec = spec;
    g.order = spec.order();
    g.classes = a.classes;
    g.square_class = a.square_class;
    g.degrees = a.degrees;
    for (const auto& row : a.rows) {
        std::vector<CycNum> r;
        for (const auto& cell : row) r.push_back(cell_value(a.conductor, cell));
        g.table.push_back(std::move(r));
    }
    g.std_values = g.table[a.std_row];
    canonical_sort(g, a.std_row);
    CheckReport rep = verify_character_table(g);
    if (!rep.all_passed()) {
        std::string what = "embedded character table failed validation:";
        for (const auto& it : rep.items)
            if (!it.passed) what += " [" + it.name + "] " + it.detail;
        throw std::logic_error(what);
    }
    return g;
}

} // namespace

GroupData build_group(const GroupSpec& spec) {
    switch (spec.family) {
        case Family::Cyclic:
            if (spec.param < 1) throw InvalidParameter("cyclic order must be >= 1");
            return build_cyclic(spec.param);
        case Family::BinaryDihedral:
            if (spec.param < 2) throw InvalidParameter("binary dihedral parameter must be >= 2");
            return build_binary_dihedral(spec.param);
        case Family::BinaryTetrahedral: return build_exceptional(spec, asset_2T());
        case Family::BinaryOctahedral: return build_exceptional(spec, asset_2O());
        case Family::BinaryIcosahedral: return build_exceptional(spec, asset_2I());
    }
    throw InvalidParameter("unknown family");
}

std::vector<CycNum> standard_character(const GroupData& g) { return g.std_values; }

CheckReport verify_character_table(const GroupData& g) {
    CheckReport rep;
    const int nr = (int)g.table.size();
    const int nc = g.num_classes();

    bool trivial_ok = !g.table.empty();
    for (int c = 0; c < nc && trivial_ok; ++c) trivial_ok = (g.table[0][c] == CycNum(1));
    rep.add("row0_trivial", trivial_ok);

    long long class_sum = 0;
    for (const auto& cc : g.classes) class_sum += cc.size;
    rep.add("class_sizes_sum", class_sum == g.order,
            class_sum == g.order ? "" : "sum=" + std::to_string(class_sum));

    long long deg_sq = 0;
    bool deg_col_ok = true;
    for (int r = 0; r < nr; ++r) {
        deg_sq += g.degrees[r] * g.degrees[r];
        if (!(g.table[r][0] == CycNum(Rational(g.degrees[r])))) deg_col_ok = false;
    }
    rep.add("degree_matches_identity_column", deg_col_ok);
    rep.add("degree_square_sum", deg_sq == g.order,
            deg_sq == g.order ? "" : "sum=" + std::to_string(deg_sq));

    bool row_orth = true;
    std::string row_detail;
    for (int a = 0; a < nr && row_orth; ++a)
        for (int b = 0; b < nr && row_orth; ++b) {
            CycNum ip = g.inner_product_rows(a, b);
            CycNum expect(a == b ? 1 : 0);
            if (!(ip == expect)) {
                row_orth = false;
                row_detail = "rows (" + std::to_string(a) + "," + std::to_string(b) +
                             ") residual " + (ip - expect).str();
            }
        }
    rep.add("row_orthogonality", row_orth, row_detail);

    bool col_orth = true;
    std::string col_detail;
    for (int c = 0; c < nc && col_orth; ++c)
        for (int d = 0; d < nc && col_orth; ++d) {
            CycNum sum;
            for (int r = 0; r < nr; ++r) sum += g.table[r][c] * g.table[r][d].conj();
            CycNum expect(c == d ? Rational(g.order, g.classes[c].size) : Rational(0));
            if (!(sum == expect)) {
                col_orth = false;
                col_detail = "classes (" + std::to_string(c) + "," + std::to_string(d) +
                             ") residual " + (sum - expect).str();
            }
        }
    rep.add("column_orthogonality", col_orth, col_detail);

    bool std_real = true, std_selfdual = true;
    for (int c = 0; c < nc; ++c) {
        if (!(g.std_values[c].conj() == g.std_values[c])) std_real = false;
        if (!(g.std_values[c] == g.std_values[g.classes[c].inverse_class])) std_selfdual = false;
    }
    rep.add("std_real", std_real);
    rep.add("std_self_dual", std_selfdual);
    rep.add("std_degree_two", g.std_values[0] == CycNum(2));

    // Exterior square of the defining representation is trivial exactly once:
    // <(chi_std^2 - chi_std(g^2))/2, chi_0> = 1. This is the SL2 determinant
    // constraint and holds for the cyclic groups too, where chi_std is
    // reducible and <chi_std^2, chi_0> alone would be 2 (or 4 for l <= 2).
    {
        std::vector<CycNum> ext2(nc);
        for (int c = 0; c < nc; ++c)
            ext2[c] = (g.std_values[c] * g.std_values[c] - g.std_values[g.square_class[c]]) *
                      CycNum(Rational(1, 2));
        std::vector<CycNum> triv(nc, CycNum(1));
        CycNum ip = g.inner_product(ext2, triv);
        rep.add("exterior_square_trivial", ip == CycNum(1), ip.str());
    }

    // Float cross-check of row orthogonality at 1e-9; the only place any
    // floating arithmetic touches character data.
    {
        double worst = 0.0;
        for (int a = 0; a < nr; ++a)
            for (int b = 0; b < nr; ++b) {
                std::complex<double> sum(0, 0);
                for (int c = 0; c < nc; ++c)
                    sum += double(g.classes[c].size) * g.table[a][c].to_complex() *
                           std::conj(g.table[b][c].to_complex());
                sum /= double(g.order);
                worst = std::max(worst, std::abs(sum - std::complex<double>(a == b ? 1 : 0, 0)));
            }
        std::ostringstream os;
        os << worst;
        rep.add("float_crosscheck_1e-9", worst <= 1e-9, os.str());
    }
    return rep;
}

} // namespace mckay
