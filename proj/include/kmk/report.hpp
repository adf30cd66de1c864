#pragma once

#include <string>
#include <vector>

namespace kmk {

/* Outcome of one machine-checked identity. `first_mismatch` pinpoints the
 * earliest failing location (q-order, weight offset, t-degree) when the check
 * fails. */
struct Report {
    std::string identity;
    bool pass = true;
    std::vector<std::string> lines;
    std::string first_mismatch;

    void fail(const std::string& where) {
        if (pass) first_mismatch = where;
        pass = false;
    }
};

} // namespace kmk
