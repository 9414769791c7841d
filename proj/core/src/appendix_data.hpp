#pragma once

#include <array>
#include <string_view>

namespace minorsieve::detail {

extern const std::array<std::string_view, 15> kAppendixMmne;
extern const std::array<std::string_view, 22> kAppendixMmnc;

}  // namespace minorsieve::detail
