#pragma once

// Text format for algebra tables.
//
//   # comment
//   name: osp12
//   basis: H:0 X:0 Y:0 x:1 y:1        name:parity, parity 0 (even) or 1 (odd)
//   cartan: H
//   weights: t                        one highest-weight coordinate name per cartan element
//   compact: H                        basis elements spanning k_C
//   brackets:
//     [H,X] = 2*X                     missing pairs are zero; the super-antisymmetric
//     [x,y] = H                       partner is derived unless given explicitly
//   roots:
//     X = 2 ; positive ; noncompact   coordinates on the cartan basis; flags
//   conjugation:
//     x -> -i*y                       sigma(b), one row per basis element
//
// Right-hand sides are linear combinations in the shared expression grammar.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "suprep/algebra.hpp"
#include "suprep/expression.hpp"

namespace suprep {

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

inline std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      out.push_back(trim(s.substr(start, k - start)));
      start = k + 1;
    }
  }
  return out;
}

/// Evaluates an expression that must be linear in the basis.
struct LinearOps {
  const AlgebraData& data;
  int line;

  // Values are (is_scalar, scalar part, linear part).
  struct Value {
    bool scalar = true;
    Scalar s;
    LinComb v;
  };

  [[noreturn]] void fail(const std::string& msg, const Expr& e) const {
    throw ParseError(msg, line, e.column);
  }
  Value number(const mpq_class& q, const Expr&) { return {true, Scalar(q), {}}; }
  Value imag(const Expr&) { return {true, Scalar::i(), {}}; }
  Value symbol(const std::string& name, const Expr& e) {
    auto k = data.index_of(name);
    if (!k) fail("unknown basis element '" + name + "'", e);
    return {false, {}, lin::basis(*k)};
  }
  Value add(Value a, const Value& b, const Expr&) {
    if (a.scalar && b.scalar) return {true, a.s + b.s, {}};
    if (a.scalar || b.scalar) {
      const Value& s = a.scalar ? a : b;
      if (!s.s.is_zero()) fail("constant term in a linear combination of basis elements", {});
      return a.scalar ? b : a;
    }
    lin::add_to(a.v, b.v);
    return a;
  }
  Value neg(Value a, const Expr&) {
    if (a.scalar) return {true, -a.s, {}};
    return {false, {}, lin::scaled(a.v, Scalar(-1))};
  }
  Value mul(const Value& a, const Value& b, const Expr& e) {
    if (a.scalar && b.scalar) return {true, a.s * b.s, {}};
    if (a.scalar) return {false, {}, lin::scaled(b.v, a.s)};
    if (b.scalar) return {false, {}, lin::scaled(a.v, b.s)};
    fail("product of basis elements is not linear", e);
  }
  Value pow(const Value& a, unsigned n, const Expr& e) {
    if (!a.scalar) fail("power of a basis element is not linear", e);
    Scalar r(1);
    for (unsigned k = 0; k < n; ++k) r *= a.s;
    return {true, r, {}};
  }
  Value call(const std::string& name, const Value&, const Expr& e) {
    fail("function '" + name + "' is not allowed in a table", e);
  }
};

inline LinComb parse_lincomb(const AlgebraData& data, std::string_view text, int line) {
  Expr e = parse_expression(text, line);
  LinearOps ops{data, line};
  auto v = evaluate<LinearOps::Value>(e, ops);
  if (v.scalar) {
    if (!v.s.is_zero()) throw ParseError("expected a linear combination of basis elements", line);
    return {};
  }
  return v.v;
}

}  // namespace detail

/// Parses the table format without validating the axioms.
inline AlgebraData parse_algebra_document(std::string_view document) {
  AlgebraData d;
  std::istringstream in{std::string(document)};
  std::string raw;
  int line = 0;
  std::string section;
  std::vector<std::pair<int, std::string>> bracket_lines, root_lines, conj_lines;
  std::vector<std::string> cartan_names, compact_names;
  int cartan_line = 0, compact_line = 0;
  bool have_basis = false;

  while (std::getline(in, raw)) {
    ++line;
    std::string text = raw;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    text = detail::trim(text);
    if (text.empty()) continue;

    auto colon = text.find(':');
    std::string key = colon == std::string::npos ? "" : detail::trim(text.substr(0, colon));
    bool is_key = !key.empty() && key.find_first_of(" [=") == std::string::npos &&
                  (key == "name" || key == "basis" || key == "cartan" || key == "weights" ||
                   key == "compact" || key == "brackets" || key == "roots" || key == "conjugation");
    if (is_key) {
      std::string value = detail::trim(text.substr(colon + 1));
      section.clear();
      if (key == "name") {
        d.name = value;
      } else if (key == "basis") {
        for (const auto& item : detail::split_ws(value)) {
          auto c = item.find(':');
          if (c == std::string::npos)
            throw ParseError("basis entry '" + item + "' must be name:parity", line);
          std::string p = item.substr(c + 1);
          if (p != "0" && p != "1") throw ParseError("parity of '" + item + "' must be 0 or 1", line);
          d.basis_names.push_back(item.substr(0, c));
          d.parity.push_back(p == "1" ? 1 : 0);
        }
        have_basis = true;
      } else if (key == "cartan") {
        cartan_names = detail::split_ws(value);
        cartan_line = line;
      } else if (key == "weights") {
        d.weight_names = detail::split_ws(value);
      } else if (key == "compact") {
        compact_names = detail::split_ws(value);
        compact_line = line;
      } else {
        if (!value.empty()) throw ParseError("section '" + key + "' takes no inline value", line);
        section = key;
      }
      continue;
    }
    if (section == "brackets") bracket_lines.emplace_back(line, text);
    else if (section == "roots") root_lines.emplace_back(line, text);
    else if (section == "conjugation") conj_lines.emplace_back(line, text);
    else throw ParseError("unrecognized line '" + text + "'", line);
  }
  if (!have_basis) throw ParseError("missing 'basis' field");

  auto index = [&](const std::string& name, int ln) {
    auto k = d.index_of(name);
    if (!k) throw ParseError("unknown basis element '" + name + "'", ln);
    return *k;
  };
  for (const auto& n : cartan_names) d.cartan.push_back(index(n, cartan_line));
  for (const auto& n : compact_names) d.compact.push_back(index(n, compact_line));
  if (d.weight_names.empty()) {
    if (d.cartan.size() == 1) d.weight_names = {"t"};
    else
      for (std::size_t k = 0; k < d.cartan.size(); ++k) d.weight_names.push_back("t" + std::to_string(k + 1));
  }

  std::map<std::pair<std::size_t, std::size_t>, LinComb> given;
  for (const auto& [ln, text] : bracket_lines) {
    auto eq = text.find('=');
    if (text.empty() || text[0] != '[' || eq == std::string::npos)
      throw ParseError("bracket line must read [a,b] = combination", ln);
    auto close = text.find(']');
    if (close == std::string::npos || close > eq) throw ParseError("missing ']'", ln);
    auto args = detail::split_on(std::string_view(text).substr(1, close - 1), ',');
    if (args.size() != 2) throw ParseError("bracket needs exactly two arguments", ln);
    std::size_t a = index(args[0], ln), b = index(args[1], ln);
    if (given.count({a, b})) throw ParseError("bracket [" + args[0] + "," + args[1] + "] given twice", ln);
    given[{a, b}] = detail::parse_lincomb(d, std::string_view(text).substr(eq + 1), ln);
  }
  for (const auto& [key, v] : given) {
    if (!v.empty()) d.bracket[key] = v;
    std::pair<std::size_t, std::size_t> partner{key.second, key.first};
    if (given.count(partner)) continue;
    Scalar s = Scalar(-1) * Scalar::sign(d.parity[key.first] * d.parity[key.second]);
    LinComb w = lin::scaled(v, s);
    if (!w.empty()) d.bracket[partner] = std::move(w);
  }

  for (const auto& [ln, text] : root_lines) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("root line must read name = coords ; sign ; compactness", ln);
    Root r;
    r.vector = index(detail::trim(text.substr(0, eq)), ln);
    auto fields = detail::split_on(std::string_view(text).substr(eq + 1), ';');
    if (fields.size() != 3) throw ParseError("root line needs coords ; positive|negative ; compact|noncompact", ln);
    for (const auto& c : detail::split_ws(fields[0])) {
      try {
        r.coords.emplace_back(parse_rational(c));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), ln);
      }
    }
    if (fields[1] == "positive") r.positive = true;
    else if (fields[1] == "negative") r.positive = false;
    else throw ParseError("expected 'positive' or 'negative', got '" + fields[1] + "'", ln);
    if (fields[2] == "compact") r.compact = true;
    else if (fields[2] == "noncompact") r.compact = false;
    else throw ParseError("expected 'compact' or 'noncompact', got '" + fields[2] + "'", ln);
    d.roots.push_back(std::move(r));
  }

  if (!conj_lines.empty()) {
    d.conjugation.assign(d.dim(), LinComb{});
    std::vector<bool> seen(d.dim(), false);
    for (const auto& [ln, text] : conj_lines) {
      auto arrow = text.find("->");
      if (arrow == std::string::npos) throw ParseError("conjugation line must read name -> combination", ln);
      std::size_t k = index(detail::trim(text.substr(0, arrow)), ln);
      if (seen[k]) throw ParseError("conjugation of '" + d.basis_names[k] + "' given twice", ln);
      seen[k] = true;
      d.conjugation[k] = detail::parse_lincomb(d, std::string_view(text).substr(arrow + 2), ln);
    }
    for (std::size_t k = 0; k < d.dim(); ++k)
      if (!seen[k]) throw ParseError("conjugation row missing for '" + d.basis_names[k] + "'");
  }
  return d;
}

/// Parses and validates; throws ParseError or ValidationError.
inline AlgebraPtr load_algebra(std::string_view document) {
  return SuperAlgebra::create(parse_algebra_document(document));
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

/// Canonical text form; load_algebra(serialize_algebra(d)) reproduces d.
inline std::string serialize_algebra(const AlgebraData& d) {
  std::ostringstream out;
  out << "name: " << d.name << "\n";
  out << "basis:";
  for (std::size_t k = 0; k < d.dim(); ++k) out << " " << d.basis_names[k] << ":" << d.parity[k];
  out << "\ncartan:";
  for (auto k : d.cartan) out << " " << d.basis_names[k];
  out << "\nweights:";
  for (const auto& w : d.weight_names) out << " " << w;
  out << "\ncompact:";
  for (auto k : d.compact) out << " " << d.basis_names[k];
  out << "\nbrackets:\n";
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = i; j < d.dim(); ++j) {
      const LinComb& v = d.bracket_of(i, j);
      if (v.empty()) continue;
      out << "  [" << d.basis_names[i] << "," << d.basis_names[j] << "] = " << d.render(v) << "\n";
    }
  out << "roots:\n";
  for (const auto& r : d.roots) {
    out << "  " << d.basis_names[r.vector] << " =";
    for (const auto& c : r.coords) out << " " << c.str();
    out << " ; " << (r.positive ? "positive" : "negative") << " ; "
        << (r.compact ? "compact" : "noncompact") << "\n";
  }
  out << "conjugation:\n";
  for (std::size_t k = 0; k < d.conjugation.size(); ++k)
    out << "  " << d.basis_names[k] << " -> " << d.render(d.conjugation[k]) << "\n";
  return out.str();
}

/// Highest weight from `t=-1`, `t1=1/2,t2=-3` or positional `-1`. Coordinates
/// are exact Gaussian rationals such as `1/2+3*i`.
inline Weight parse_weight(const AlgebraData& d, std::string_view text) {
  const auto& names = d.weight_names;
  Weight w;
  w.coords.assign(names.size(), Scalar());
  std::vector<bool> seen(names.size(), false);
  auto parts = detail::split_on(text, ',');
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::string part = detail::trim(parts[k]);
    std::size_t slot = k;
    if (auto eq = part.find('='); eq != std::string::npos) {
      std::string name = detail::trim(part.substr(0, eq));
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw ParseError("unknown weight coordinate '" + name + "'");
      slot = static_cast<std::size_t>(it - names.begin());
      part = part.substr(eq + 1);
    }
    if (slot >= names.size())
      throw ParseError("weight has more than " + std::to_string(names.size()) + " coordinates");
    if (seen[slot]) throw ParseError("weight coordinate '" + names[slot] + "' given twice");
    detail::LinearOps ops{d, 0};
    auto v = evaluate<detail::LinearOps::Value>(parse_expression(part), ops);
    if (!v.scalar) throw ParseError("weight coordinate '" + names[slot] + "' is not a number");
    w.coords[slot] = v.s;
    seen[slot] = true;
  }
  for (std::size_t k = 0; k < names.size(); ++k)
    if (!seen[k]) throw ParseError("weight coordinate '" + names[k] + "' missing");
  return w;
}

/// `osp12`, `sl2` or a path to a table file.
inline AlgebraPtr resolve_algebra(const std::string& spec) {
  if (spec == "osp12") return builtin_osp12();
  if (spec == "sl2") return builtin_sl2();
  return load_algebra(read_text_file(spec));
}

}  // namespace suprep
