#pragma once

#include <string>

namespace biasgauge {

// Fixed-point rendering used everywhere a probability or statistic is
// displayed (reports, badges, flag messages): locale-independent "%.3f".
std::string render_fixed(double value, int decimals = 3);

}  // namespace biasgauge
