#ifndef WCPSWF_IO_HPP
#define WCPSWF_IO_HPP

// Deterministic serialization.  All floating-point fields are written with
// 17 significant digits (%.17g) in both CSV and JSON so files round-trip
// bit-exactly and repeated runs are byte-identical.

#include "wcpswf/cpswf.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace wcpswf {

// %.17g rendering of a double.
std::string format_float(double v);

// {"pairs": [...]} document.
void write_eigenpairs_json(std::ostream& os, const std::vector<CpswfEigenpair>& pairs);
std::string eigenpairs_to_json(const std::vector<CpswfEigenpair>& pairs);

// Inverse of write_eigenpairs_json.  Throws std::invalid_argument on
// malformed documents.
std::vector<CpswfEigenpair> read_eigenpairs_json(std::istream& is);
std::vector<CpswfEigenpair> read_eigenpairs_json_string(const std::string& text);

// One CSV row per call site; fields joined with commas, floats via
// format_float.
void write_csv_row(std::ostream& os, const std::vector<std::string>& cells);
void write_csv_row(std::ostream& os, const std::vector<double>& values);

} // namespace wcpswf

#endif
