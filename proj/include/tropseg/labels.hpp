#pragma once

#include <string>
#include <string_view>

namespace tropseg {

/// Natural ordering: runs of digits compare by numeric value, so "2" < "10" and "S2" < "S10".
bool natural_less(std::string_view a, std::string_view b);

struct NaturalLess {
  bool operator()(std::string_view a, std::string_view b) const { return natural_less(a, b); }
};

}  // namespace tropseg
