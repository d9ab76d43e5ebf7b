#ifndef PVI_IO_HPP
#define PVI_IO_HPP

#include <string>
#include <vector>

#include "pvi/connection.hpp"
#include "pvi/covering.hpp"
#include "pvi/mat2.hpp"
#include "pvi/monodromy.hpp"

#include "json.hpp"

namespace pvi::io {

using nlohmann::json;

// Complex numbers serialize as [re, im]; triples as arrays of three pairs;
// 2x2 matrices as row-major arrays of pairs.
json to_json(Complex z);
json to_json(const monodromy::MonodromyTriple& t);
json to_json(const Mat2& m);
json to_json(const connection::CriticalData& cd);

Complex complex_from_json(const json& j);
monodromy::MonodromyTriple triple_from_json(const json& j);

// Accepts "re", "re+imi", "re-imi", "i", "-i", "2i", and the named values
// "sqrt2"/"-sqrt2" used on the command line.
Complex parse_complex(const std::string& text);

// "a,b,c" with each component through parse_complex.
monodromy::MonodromyTriple parse_triple(const std::string& text);

std::string case_name(connection::CaseKind kind);
std::string point_name(connection::CriticalPoint p);

// Provenance header lines ("# key: value") prepended to CSV outputs.
std::string provenance_header(const std::vector<std::pair<std::string, std::string>>& kv);

}  // namespace pvi::io

#endif
