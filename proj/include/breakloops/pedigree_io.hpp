#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "breakloops/pedigree.hpp"

namespace breakloops {

struct ParseOptions {
    /// Field separator. Detected from the header line when unset: tab if the
    /// header contains one, comma otherwise.
    std::optional<char> delimiter;
    /// Restrict variant columns to these names (all must be present). When
    /// unset, every non-reserved column is a variant column.
    std::optional<std::vector<std::string>> variants;
};

/// Reads a delimited pedigree table.
///
/// Required columns: ID, MotherID, FatherID, Sex, isProband. Optional
/// columns CloneOf and IsPlaceholder are read back from serialized output.
/// All other columns are variant test results.
///
/// Accepted tokens:
///   parents   empty, 0, NA -> absent
///   Sex       0, F, female -> female; 1, M, male -> male
///   isProband 1, true, yes / 0, false, no, empty
///   tests     1, carrier / 0, non_carrier / empty, NA -> untested
Pedigree parse_pedigree(std::istream& in, const ParseOptions& options = {});
Pedigree parse_pedigree(const std::string& text, const ParseOptions& options = {});
Pedigree read_pedigree_file(const std::string& path, const ParseOptions& options = {});

/// Writes the canonical table: ID, MotherID, FatherID, Sex, isProband,
/// variant columns, CloneOf, IsPlaceholder. Missing parents and untested
/// variants are written as NA, sex as 0 (female) / 1 (male).
void write_pedigree(std::ostream& out, const Pedigree& p, char delimiter = ',');
std::string serialize_pedigree(const Pedigree& p, char delimiter = ',');

}  // namespace breakloops
