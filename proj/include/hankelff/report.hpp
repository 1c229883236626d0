#pragma once

#include <json.hpp>

#include <string>

#include "hankelff/census.hpp"
#include "hankelff/cyclosum.hpp"
#include "hankelff/divisor.hpp"
#include "hankelff/hankel.hpp"

namespace hankelff {

using Json = nlohmann::json;

Json field_to_json(const Field& f);
Json elem_to_json(const Field& f, uint32_t code);  // int when e == 1, else repr list
Json poly_to_json(const Poly& p);
Json seq_to_json(const SymbolSeq& s);
Json profile_to_json(const RhoPiProfile& p);
Json charpair_to_json(const CharPair& cp);
Json cyc_to_json(const CycInt& z);

std::string rat_str(const BigRat& r);  // always "num/den"
std::string int_str(const BigInt& v);

/// envelope documents rendered as CSV: a section column followed by the
/// sorted union of flattened row keys; numeric content is carried verbatim
std::string envelope_to_csv(const Json& envelope);

}  // namespace hankelff
