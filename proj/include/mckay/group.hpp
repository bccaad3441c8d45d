#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mckay/cyclotomic.hpp"
#include "mckay/report.hpp"

namespace mckay {

enum class Family { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

struct GroupSpec {
    Family family = Family::Cyclic;
    long long param = 1; // ell for Cyclic, m for BinaryDihedral, unused otherwise

    static GroupSpec cyclic(long long ell) { return {Family::Cyclic, ell}; }
    static GroupSpec binary_dihedral(long long m) { return {Family::BinaryDihedral, m}; }
    // Accepts cyclic:<l>, bd:<m>, 2T, 2O, 2I.
    static GroupSpec parse(const std::string& text);

    long long order() const;
    std::string str() const;
};

struct ConjClass {
    std::string label;
    long long size = 0;
    int inverse_class = 0; // index of the class of inverses
};

// Exact character data of a finite SL2(C) subgroup. Rows are sorted
// canonically: trivial character first, then ascending degree, ties broken
// by lexicographic comparison of the reduced value sequences. All vertex
// indexing downstream inherits this row order.
struct GroupData {
    GroupSpec spec;
    long long order = 0;
    std::vector<ConjClass> classes;
    std::vector<std::vector<CycNum>> table; // rows = irreducible characters
    std::vector<long long> degrees;         // chi(id) per row
    std::vector<CycNum> std_values;         // character of the defining 2-dim rep, per class
    std::optional<int> std_row;             // row index when the standard character is irreducible
    std::vector<int> square_class;          // class index of g^2 for g in each class

    int num_classes() const { return (int)classes.size(); }

    // <chi_a, chi_b> = (1/|G|) sum_C |C| chi_a(C) conj(chi_b(C)), exact.
    CycNum inner_product_rows(int a, int b) const;
    CycNum inner_product(const std::vector<CycNum>& a, const std::vector<CycNum>& b) const;
};

GroupData build_group(const GroupSpec& spec);

// Re-checks every table invariant; report-only.
CheckReport verify_character_table(const GroupData& g);

// Exact values of the standard character on each class.
std::vector<CycNum> standard_character(const GroupData& g);

} // namespace mckay
