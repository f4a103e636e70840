#pragma once

#include <string>
#include <vector>

#include "qpi/weights.hpp"

namespace qpi {

struct TableRow {
    std::string partition;  // frequency notation
    int witness = 0;        // R/Q witness n, 0 when not applicable
    Int weight;
};

struct TableSection {
    std::string title;
    long long norm = 0;
    std::vector<TableRow> rows;
    Int total;
};

/* Fully worked weighted counts at a fixed norm:
 *   2: t(pi) over partitions of 10 with f_1 odd
 *   3: tau(pi) over partitions of 8 (rows with tau != 0)
 *   4: omega*(pi) over all partitions of 4 and of 5
 *   7: 2^{nu_d} over partitions of 7 without parts divisible by 3, and the
 *      matching mu- and eta-weighted families
 * Any other id raises std::invalid_argument. */
std::vector<TableSection> example_table(int table_id);

}  // namespace qpi
