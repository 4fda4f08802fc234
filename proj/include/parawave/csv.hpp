#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace parawave::csv {

// Scientific notation with 6 significant digits, the numeric format of all
// CSV outputs.
std::string num(double value);

void write_row(std::ostream& os, std::initializer_list<std::string_view> cells);

}  // namespace parawave::csv
