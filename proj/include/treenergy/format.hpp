#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace treenergy {

/// Fixed 12-significant-digit rendering used for every float the tools emit,
/// so identical invocations are byte-identical.
inline std::string fmt_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

/// Round a double to its 12-significant-digit rendering (for JSON payloads).
inline double round_g12(double v) {
    return std::strtod(fmt_g12(v).c_str(), nullptr);
}

}  // namespace treenergy
