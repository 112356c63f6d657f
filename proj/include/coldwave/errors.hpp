#ifndef COLDWAVE_ERRORS_HPP
#define COLDWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace coldwave {

struct NonFiniteField : std::runtime_error {
    explicit NonFiniteField(const std::string& what) : std::runtime_error(what) {}
};

struct VacuumDensity : std::runtime_error {
    explicit VacuumDensity(const std::string& what) : std::runtime_error(what) {}
};

struct EllipticNoConvergence : std::runtime_error {
    EllipticNoConvergence(const std::string& what, double residual)
        : std::runtime_error(what), residual(residual) {}
    double residual;
};

struct ModelMismatch : std::runtime_error {
    explicit ModelMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct SignalTooNonlinear : std::runtime_error {
    explicit SignalTooNonlinear(const std::string& what) : std::runtime_error(what) {}
};

// Collects every violated constraint so a bad config is reported in one pass.
struct ConfigError : std::runtime_error {
    explicit ConfigError(std::vector<std::string> issues_)
        : std::runtime_error(join(issues_)), issues(std::move(issues_)) {}
    std::vector<std::string> issues;

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "invalid config:";
        for (const auto& e : v) s += "\n  - " + e;
        return s;
    }
};

}  // namespace coldwave

#endif
