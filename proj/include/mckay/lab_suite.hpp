#pragma once

#include <string>
#include <vector>

#include "mckay/repspace.hpp"

namespace mckay {

struct LabCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct LabReport {
    std::vector<LabCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    void add(const std::string& name, double residual, double tolerance) {
        checks.push_back({name, residual, tolerance, residual <= tolerance});
    }
    void add_flag(const std::string& name, bool ok) {
        checks.push_back({name, ok ? 0.0 : 1.0, 0.5, ok});
    }
};

// Randomized invariant battery for a matrix lab: sum rule, calibration,
// functor round trips, moment-map diagram, symplectic match. Supports the
// cyclic and binary dihedral families.
LabReport repspace_suite_for(const GroupSpec& spec, unsigned long long seed, int samples);

inline LabReport repspace_suite(long long ell, unsigned long long seed, int samples) {
    return repspace_suite_for(GroupSpec::cyclic(ell), seed, samples);
}

// Partition-driven fixed-point battery: deconstruction recovers the residue
// character, reconstruction is exact, semistability matches the cyclic-vector
// criterion.
LabReport fixed_point_suite(long long ell, long long max_n);

} // namespace mckay
