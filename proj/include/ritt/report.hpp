#pragma once

#include <string>

namespace ritt {

/// One line of a verification report. Informational checks document an
/// alternative reading and never decide a verdict.
struct Check {
    std::string name;
    bool pass;
    std::string detail;
    bool informational = false;
};

}  // namespace ritt
