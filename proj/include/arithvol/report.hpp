#pragma once

#include "arithvol/bounded_value.hpp"
#include "arithvol/bounds.hpp"

#include <json.hpp>

#include <string>

namespace arithvol::report {

using ojson = nlohmann::ordered_json;

inline constexpr int significant_digits = 12;

/* x rounded to 12 significant digits: to nearest (dir = 0), never above x
 * (dir < 0) or never below x (dir > 0) */
double round_sig(double x, int dir = 0);

ojson number(double x);
ojson integer(mpz_class const & z);
ojson rational(mpq_class const & q);
/* [lo, hi] rounded outward */
ojson interval(BoundedValue const & v);

ojson chain_to_json(ChainReport const & rep);

enum class Format { json, csv, text };

/* json: pretty-printed; csv: "path,value" rows; text: "path = value" lines */
std::string render(ojson const & doc, Format format);

} // namespace arithvol::report
