#pragma once

#include <string>
#include <string_view>

namespace shapes {

enum class Statistics { Fermion, Boson };

std::string to_string(Statistics s);
Statistics parse_statistics(std::string_view name);

}  // namespace shapes
