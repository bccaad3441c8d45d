#pragma once

#include <stdexcept>
#include <string>

namespace mckay {

// Library errors carry a stable code string so the CLI can map them to
// exit statuses and machine-readable reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& w) : Error("InvalidParameter", w) {}
};
struct NonIntegralMultiplicity : Error {
    explicit NonIntegralMultiplicity(const std::string& w) : Error("NonIntegralMultiplicity", w) {}
};
struct NotAffineADE : Error {
    explicit NotAffineADE(const std::string& w) : Error("NotAffineADE", w) {}
};
struct BoundExceeded : Error {
    explicit BoundExceeded(const std::string& w) : Error("BoundExceeded", w) {}
};
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& w) : Error("BudgetExceeded", w) {}
};
struct OnWall : Error {
    explicit OnWall(const std::string& w) : Error("OnWall", w) {}
};
struct UnsupportedFormat : Error {
    explicit UnsupportedFormat(const std::string& w) : Error("UnsupportedFormat", w) {}
};
struct UnsupportedFamily : Error {
    explicit UnsupportedFamily(const std::string& w) : Error("UnsupportedFamily", w) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& w) : Error("DimensionMismatch", w) {}
};
struct DegenerateBracket : Error {
    explicit DegenerateBracket(const std::string& w) : Error("DegenerateBracket", w) {}
};
struct NotFixed : Error {
    explicit NotFixed(const std::string& w) : Error("NotFixed", w) {}
};
struct NotStable : Error {
    explicit NotStable(const std::string& w) : Error("NotStable", w) {}
};

} // namespace mckay
