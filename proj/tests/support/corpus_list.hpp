#pragma once

#include <string>
#include <utility>
#include <vector>

#include "icc/corpus.hpp"

namespace testing_corpus {

inline std::vector<std::pair<std::string, icc::Digraph>> instances() {
    return {
        {"fig2a", icc::gen_fig2a()},           {"class_a(4)", icc::gen_class_a(4)},
        {"class_a(6)", icc::gen_class_a(6)},   {"class_a(8)", icc::gen_class_a(8)},
        {"example4(6)", icc::gen_example4(6)}, {"example4(8)", icc::gen_example4(8)},
        {"example4(10)", icc::gen_example4(10)}, {"fig8", icc::gen_fig8()},
    };
}

}  // namespace testing_corpus
