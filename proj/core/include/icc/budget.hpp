#pragma once

#include <cstdint>
#include <limits>

namespace icc {

/// Cooperative step budget for the exponential searches. Not thread-safe;
/// every search invocation owns its own instance.
class Budget {
public:
    static constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

    explicit Budget(std::uint64_t steps = kUnlimited) : limit_(steps) {}

    /// Spends `n` steps. Returns false once the budget is exhausted.
    bool consume(std::uint64_t n = 1);

    bool exhausted() const noexcept { return exhausted_; }
    std::uint64_t used() const noexcept { return used_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    bool exhausted_ = false;
};

}  // namespace icc
