#pragma once

#include <string>
#include <string_view>

#include "supergrade/algebra.hpp"

namespace supergrade {

/// Line-oriented structure-constant format. Besides the core lines (kind,
/// dim, parity, unit, label, sc) a document may carry construction metadata:
///   name <word>          provenance name
///   param <key> <value>  provenance parameter
///   elem <name> i:c ...  named element (1-based indices)
///   unit i:c ...         unit given as a combination
StructureTable parse_sca(std::string_view text);

/// Canonical bytes: header, metadata in stored order, labels, then sc lines
/// sorted by (i,j,k).
std::string write_sca(const StructureTable& t);

/// Parses and runs the validator matching the declared kind.
LieSuperalgebra read_lie(std::string_view text);
AssocSuperalgebra read_assoc(std::string_view text);
JordanSuperalgebra read_jordan(std::string_view text);

}  // namespace supergrade
