#include "parawave/csv.hpp"

#include "parawave/analysis.hpp"

namespace parawave::csv {

std::string num(double value) { return format_scientific(value, 6); }

void write_row(std::ostream& os,
               std::initializer_list<std::string_view> cells) {
  bool first = true;
  for (std::string_view cell : cells) {
    if (!first) os << ',';
    os << cell;
    first = false;
  }
  os << '\n';
}

}  // namespace parawave::csv
