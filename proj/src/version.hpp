#pragma once

namespace pcol {

inline constexpr const char* kVersion = "0.1.0";

}
