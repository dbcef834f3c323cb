#pragma once

#include <json.hpp>
#include <string>

#include "alcove/rational.hpp"
#include "alcove/theory.hpp"

namespace alcove {

// All exact values serialize as canonical strings (GMP decimal / "p/q") so
// exports are byte-deterministic and lossless; container indices stay native.
using ojson = nlohmann::ordered_json;

std::string int_str(const Int& v);

ojson jint(const Int& v);
ojson jrat(const Rat& v);
ojson jrateps(const RatEps& v);
ojson jintvec(const IntVec& v);
ojson jratvec(const RatVec& v);
ojson jevec(const EVec& v);
ojson jaffine(const AffineMap& w);

// RFC 4180 field quoting (quotes doubled; quoted when a delimiter, quote or
// newline occurs).
std::string csv_field(const std::string& s);

// Write via a temporary file in the same directory plus rename, so failed
// runs never leave a partial artifact at `path`.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace alcove
