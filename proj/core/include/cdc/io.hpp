// File formats: a plain-text container for subspace codes and a JSON
// container for bound tables.
//
// Code files are line oriented:
//
//   cdcfile 1
//   q 4
//   modulus 1 1 1
//   n 8
//   k 4
//   d 4
//   count 4642
//   construction new
//
//   <k lines of n entries>            word 0, reduced echelon basis
//
//   <k lines of n entries>            word 1
//   ...
//
// The modulus line appears only for non-prime q and must list the canonical
// modulus (constant term first, leading 1 included).  Every basis is
// validated to be in reduced row echelon form with full rank.  Group
// structure is not serialized; a code read back carries words only.
//
// Table files are JSON: {"table": N, "rows": [...]} with one object per row
// holding theorem, q, n, k, delta, the value as a decimal string, and the
// exact flag.  Rows marked "reference": true ship published values for
// comparison and are not recomputed by the checker.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdc/constructions.hpp"
#include "cdc/verify.hpp"

namespace cdc {

// Thrown on malformed input files.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_code_file(std::ostream& os, const SubspaceCode& code);
SubspaceCode read_code_file(std::istream& is);

struct TableRow {
    std::string theorem;
    uint32_t q = 0;
    int n = 0, k = 0, delta = 0;
    std::string value;       // exact decimal string
    bool exact = true;
    bool reference = false;  // shipped for comparison, not recomputed
};

struct TableFile {
    int table = 0;
    std::vector<TableRow> rows;
};

TableFile read_table_file(std::istream& is);
void write_table_file(std::ostream& os, const TableFile& f);

std::string verify_report_json(const VerifyReport& rep);
std::string structure_report_json(const StructureReport& rep);

}  // namespace cdc
