#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "slcp/common.hpp"
#include "slcp/textstore.hpp"

namespace slcp::test {

inline Text banana() { return load_text("banana"); }

/// 1-based array with a zero in slot 0.
inline std::vector<size_type> one_based(std::initializer_list<size_type> values) {
    std::vector<size_type> out{0};
    out.insert(out.end(), values);
    return out;
}

template <class V>
std::vector<size_type> widen(const V& v) {
    return std::vector<size_type>(v.begin(), v.end());
}

/// Fresh scratch directory under the build tree's temp area.
inline std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("slcp-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace slcp::test
