#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace sdke {

/// Thrown when an exponential search exceeds its step budget.
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed graph input (edge list or graph6).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Step counter shared by the exponential enumerators. Every enumerator
/// charges roughly one unit per search node, so a single Budget can be
/// threaded through nested calls to bound total work.
struct Budget {
    std::uint64_t limit;
    std::uint64_t used = 0;

    Budget() : limit(default_limit()) {}
    explicit Budget(std::uint64_t max_steps) : limit(max_steps) {}

    void spend(std::uint64_t steps = 1) {
        used += steps;
        if (used > limit) {
            throw budget_exceeded("search budget exceeded (" + std::to_string(limit) + " steps)");
        }
    }

    std::uint64_t remaining() const { return used >= limit ? 0 : limit - used; }

    /// Default limit, overridable through the SDKE_BUDGET environment variable.
    static std::uint64_t default_limit() {
        static const std::uint64_t cached = [] {
            if (const char* env = std::getenv("SDKE_BUDGET")) {
                char* end = nullptr;
                unsigned long long v = std::strtoull(env, &end, 10);
                if (end != env && v > 0) return static_cast<std::uint64_t>(v);
            }
            return std::uint64_t{200'000'000};
        }();
        return cached;
    }
};

}  // namespace sdke
