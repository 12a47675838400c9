#pragma once

#include <iosfwd>
#include <string>

#include "lns/lnscore.hpp"

namespace lns {

// Table file format, line oriented text:
//   LNS1
//   P=<decimal>
//   Q=<decimal>
//   SEZ=<decimal>
//   <z> <st(z)>        (sez+1 lines, ascending z from 0)
// Every line newline-terminated, no trailing whitespace, canonical decimal
// (no leading zeros, no signs). Readers re-verify all axioms and reject
// files that fail.

struct TableFormatError : std::runtime_error {
    explicit TableFormatError(const std::string& what) : std::runtime_error(what) {}
};

void write_table(const SumTable& table, std::ostream& os);
SumTable read_table(std::istream& is);

void write_table_file(const SumTable& table, const std::string& path);
SumTable read_table_file(const std::string& path);

}  // namespace lns
