#include "icc/budget.hpp"

namespace icc {

bool Budget::consume(std::uint64_t n) {
    if (exhausted_) return false;
    if (limit_ - used_ < n) {
        used_ = limit_;
        exhausted_ = true;
        return false;
    }
    used_ += n;
    return true;
}

}  // namespace icc
