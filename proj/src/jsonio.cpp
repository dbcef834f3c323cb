#include "alcove/jsonio.hpp"

#include <cstdio>
#include <fstream>

namespace alcove {

std::string int_str(const Int& v) { return v.get_str(); }

ojson jint(const Int& v) { return int_str(v); }
ojson jrat(const Rat& v) { return rat_str(v); }

ojson jrateps(const RatEps& v) {
  if (v.b == 0) return rat_str(v.a);
  ojson o = ojson::object();
  o["a"] = rat_str(v.a);
  o["b"] = rat_str(v.b);
  return o;
}

ojson jintvec(const IntVec& v) {
  ojson arr = ojson::array();
  for (const auto& x : v) arr.push_back(int_str(x));
  return arr;
}

ojson jratvec(const RatVec& v) {
  ojson arr = ojson::array();
  for (const auto& x : v) arr.push_back(rat_str(x));
  return arr;
}

ojson jevec(const EVec& v) {
  ojson arr = ojson::array();
  for (const auto& x : v) arr.push_back(jrateps(x));
  return arr;
}

ojson jaffine(const AffineMap& w) {
  ojson o = ojson::object();
  ojson rows = ojson::array();
  for (int i = 0; i < w.lin.n; ++i) {
    ojson row = ojson::array();
    for (int j = 0; j < w.lin.n; ++j) row.push_back(int_str(w.lin.at(i, j)));
    rows.push_back(row);
  }
  o["lin"] = rows;
  o["tr"] = jratvec(w.tr);
  return o;
}

std::string csv_field(const std::string& s) {
  bool quote = s.find_first_of(",\"\n\r") != std::string::npos;
  if (!quote) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) fail(ErrKind::Domain, "cannot open output file: " + tmp);
    f.write(content.data(), (std::streamsize)content.size());
    f.flush();
    if (!f) fail(ErrKind::Domain, "write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    fail(ErrKind::Domain, "cannot move output into place: " + path);
  }
}

}  // namespace alcove
