#include "tourneykit/serialize.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "tourneykit/generators.hpp"

namespace tourneykit {

using nlohmann::json;

json instance_to_json(const Digraph& d, const json& meta) {
  json j;
  j["n"] = d.n();
  json arcs = json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back(json::array({u, v}));
  j["arcs"] = std::move(arcs);
  if (!meta.is_null() && !(meta.is_object() && meta.empty())) j["meta"] = meta;
  return j;
}

Instance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
    throw Error("BadInstance", "expected {\"n\":..., \"arcs\":[...]}");
  if (!j["n"].is_number_integer())
    throw Error("BadInstance", "\"n\" must be an integer");
  int n = j["n"].get<int>();
  if (n < 0) throw Error("BadInstance", "negative n");
  Digraph d(n);
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2)
      throw Error("BadInstance", "arcs must be [u,v] pairs");
    d.add_arc(a[0].get<int>(), a[1].get<int>());
  }
  json meta = j.contains("meta") ? j["meta"] : json::object();
  return Instance{std::move(d), std::move(meta)};
}

Instance parse_instance(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{')
    return instance_from_json(json::parse(text));
  return Instance{tournament_from_compact(text), json::object()};
}

Instance load_instance(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("BadInstance", "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_instance(ss.str());
}

std::string to_compact(const Tournament& t) {
  const int n = t.n();
  const long long m = pair_count(n);
  std::string hex;
  int nibble = 0, filled = 0;
  auto flush = [&] {
    hex += "0123456789abcdef"[nibble];
    nibble = 0;
    filled = 0;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      nibble = (nibble << 1) | (t.has_arc(u, v) ? 1 : 0);
      if (++filled == 4) flush();
    }
  if (filled) {
    nibble <<= (4 - filled);  // zero-pad the last digit
    flush();
  }
  (void)m;
  return std::to_string(n) + (hex.empty() ? "" : " " + hex);
}

Tournament tournament_from_compact(const std::string& text) {
  std::istringstream ss(text);
  int n = -1;
  std::string hex;
  ss >> n >> hex;
  if (n < 0) throw Error("BadInstance", "compact form must start with n");
  const long long m = pair_count(n);
  const long long need = (m + 3) / 4;
  if (static_cast<long long>(hex.size()) != need)
    throw Error("BadInstance", "compact form needs " + std::to_string(need) +
                                   " hex digits for n = " + std::to_string(n));
  std::vector<char> bits;
  bits.reserve(hex.size() * 4);
  for (char c : hex) {
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw Error("BadInstance", std::string("bad hex digit '") + c + "'");
    for (int b = 3; b >= 0; --b) bits.push_back((v >> b) & 1);
  }
  Digraph d(n);
  long long i = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++i) {
      if (bits[i]) d.add_arc(u, v);
      else d.add_arc(v, u);
    }
  return Tournament::trusted(std::move(d));
}

std::string to_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph G {\n";
  const auto& labels = d.labels();
  for (int v = 0; v < d.n(); ++v) {
    out << "  " << v;
    if (!labels.empty()) out << " [label=\"" << labels[v] << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::uint64_t digest(const Digraph& d) {
  const std::string canon = instance_to_json(d).dump();  // meta-free, sorted
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string digest_hex(const Digraph& d) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = digest(d);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 15];
    h >>= 4;
  }
  return out;
}

}  // namespace tourneykit
