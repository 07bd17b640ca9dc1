#pragma once

#include "prvkit/prvkit.hpp"

#include <gtest/gtest.h>

namespace prvkit::test {

inline Weight W(const char* s) { return parse_weight(s); }

}  // namespace prvkit::test
