#include "adlv/notation.hpp"

#include <sstream>

namespace adlv {

std::string print_ivec(const IVec& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

IVec parse_ivec(const std::string& text, int expect_size) {
  std::vector<Int> vals;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    require(!part.empty(), "ConfigParse", "empty coordinate in '" + text + "'");
    vals.push_back(std::stoll(part));
  }
  require(expect_size < 0 || int(vals.size()) == expect_size, "ConfigParse",
          "expected " + std::to_string(expect_size) + " coordinates in '" + text + "'");
  IVec out(vals.size());
  for (size_t i = 0; i < vals.size(); ++i) out[i] = vals[i];
  return out;
}

std::string print_qvec(const QVec& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s;
}

std::string print_elem(const ExtAffElem& x) {
  std::string s = "t[" + print_ivec(x.mu) + "]";
  for (std::uint8_t letter : x.datum->weyl().word(x.w))
    s += ".s" + std::to_string(int(letter) + 1);
  return s;
}

ExtAffElem parse_elem(const RootDatum& d, const std::string& text) {
  IVec mu = IVec::Zero(d.rank);
  size_t pos = 0;
  if (pos < text.size() && text[pos] == 't') {
    size_t open = text.find('[', pos);
    size_t close = text.find(']', pos);
    require(open != std::string::npos && close != std::string::npos && open < close,
            "ConfigParse", "malformed translation part in '" + text + "'");
    mu = parse_ivec(text.substr(open + 1, close - open - 1), d.rank);
    pos = close + 1;
    if (pos < text.size() && text[pos] == '.') ++pos;
  }
  WeylElem w = weyl_identity(d);
  while (pos < text.size()) {
    require(text[pos] == 's', "ConfigParse", "expected 's' in '" + text + "'");
    size_t end = text.find('.', pos);
    if (end == std::string::npos) end = text.size();
    int idx = std::stoi(text.substr(pos + 1, end - pos - 1)) - 1;
    require(idx >= 0 && idx < d.rank, "ConfigParse", "simple index out of range");
    w = w * weyl_simple(d, idx);
    pos = end + (end < text.size() ? 1 : 0);
  }
  return make_elem(d, mu, w.id);
}

DatumSpec datum_spec_from_json(const Json& j) {
  DatumSpec spec;
  require(j.contains("components") && j["components"].is_array(), "ConfigParse",
          "datum spec needs a components array");
  for (const auto& c : j["components"]) {
    ComponentSpec cs;
    std::string t = c.at("type").get<std::string>();
    require(t.size() == 1, "ConfigParse", "component type must be a single letter");
    cs.type = t[0];
    cs.rank = c.at("rank").get<int>();
    cs.copies = c.value("copies", 1);
    spec.push_back(cs);
  }
  return spec;
}

Json datum_spec_to_json(const DatumSpec& spec) {
  Json arr = Json::array();
  for (const auto& c : spec) {
    arr.push_back({{"type", std::string(1, c.type)},
                   {"rank", c.rank},
                   {"copies", c.copies}});
  }
  return Json{{"components", arr}};
}

std::string datum_name(const DatumSpec& spec) {
  std::string s;
  for (const auto& c : spec) {
    if (!s.empty()) s += "+";
    s += c.type + std::to_string(c.rank);
    if (c.copies > 1) s += "x" + std::to_string(c.copies);
  }
  return s;
}

DatumSpec parse_datum_name(const std::string& name) {
  DatumSpec spec;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, '+')) {
    require(!part.empty() && std::isalpha(part[0]), "ConfigParse",
            "bad datum name '" + name + "'");
    ComponentSpec c;
    c.type = char(std::toupper(part[0]));
    size_t xpos = part.find('x');
    std::string rank_str =
        xpos == std::string::npos ? part.substr(1) : part.substr(1, xpos - 1);
    c.rank = std::stoi(rank_str);
    c.copies = xpos == std::string::npos ? 1 : std::stoi(part.substr(xpos + 1));
    spec.push_back(c);
  }
  return spec;
}

Frobenius frobenius_from_json(const RootDatum& d, const Json& j) {
  if (j.is_string()) return named_frobenius(d, j.get<std::string>());
  if (j.contains("name")) return named_frobenius(d, j["name"].get<std::string>());
  require(j.contains("perm"), "ConfigParse", "frobenius spec needs perm or name");
  std::vector<int> perm;
  for (const auto& v : j["perm"]) perm.push_back(v.get<int>() - 1);
  int shift = j.value("components_shift", 0);
  if (int(perm.size()) != d.rank) {
    // per-component template applied to every copy
    require(!d.components.empty() &&
                int(perm.size()) == d.components[0].rank,
            "ConfigParse", "perm length matches neither the rank nor a component");
    std::vector<int> full(d.rank);
    for (size_t c = 0; c < d.components.size(); ++c) {
      int base = d.simples_of_component[c][0];
      for (int i = 0; i < d.components[c].rank; ++i) full[base + i] = base + perm[i];
    }
    perm = full;
  }
  if (shift != 0) {
    const int nc = int(d.components.size());
    std::vector<int> shifted(d.rank);
    for (int c = 0; c < nc; ++c) {
      const auto& from = d.simples_of_component[c];
      const auto& to = d.simples_of_component[(c + shift) % nc];
      require(from.size() == to.size(), "ConfigParse", "shift needs isomorphic copies");
      for (size_t i = 0; i < from.size(); ++i) {
        int offset = perm[from[i]] - from[0];
        shifted[from[i]] = to[0] + offset;
      }
    }
    perm = shifted;
  }
  return make_frobenius(d, perm);
}

Json frobenius_to_json(const Frobenius& sigma) {
  Json perm = Json::array();
  for (int v : sigma.simple_perm) perm.push_back(v + 1);
  return Json{{"perm", perm}, {"order", sigma.order}};
}

Json elem_to_json(const ExtAffElem& x) { return Json(print_elem(x)); }

}  // namespace adlv
