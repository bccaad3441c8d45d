#pragma once

#include <string>
#include <vector>

namespace mckay {

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail; // residual or human-readable note when failed
};

struct CheckReport {
    std::vector<CheckItem> items;

    void add(const std::string& name, bool passed, const std::string& detail = "") {
        items.push_back({name, passed, detail});
    }
    bool all_passed() const {
        for (const auto& it : items)
            if (!it.passed) return false;
        return true;
    }
};

} // namespace mckay
