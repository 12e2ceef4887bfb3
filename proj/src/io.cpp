#include "tabhom/io.hpp"

#include "tabhom/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace tabhom {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Nonnegative integers separated by spaces and/or commas.
std::vector<int> parse_ints(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i)
      throw ParseError(std::string(what) + ": unexpected '" + std::string(1, ch) + "' in \"" +
                       std::string(text) + "\"");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

Multiset row_from_entries(std::vector<int> entries, ParseOptions options, ParseNotes* notes,
                          std::string_view source) {
  for (int v : entries)
    if (v < 1) throw ParseError("tableau entries must be positive integers, got " + std::to_string(v));
  if (!std::is_sorted(entries.begin(), entries.end())) {
    if (options.strict) throw ParseError("row \"" + std::string(trim(source)) + "\" is not weakly increasing");
    if (notes) notes->warnings.push_back("sorted row \"" + std::string(trim(source)) + "\"");
  }
  return Multiset::from_entries(entries);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

bool looks_like_json(std::string_view text) {
  text = trim(text);
  return !text.empty() && text.front() == '{' && text.find('"') != std::string_view::npos;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename Coeff>
Json lincomb_json(const BasicLinComb<Coeff>& c) {
  Json terms = Json::array();
  for (const auto& [t, coeff] : c) {
    Json rows = Json::array();
    for (const auto& r : t.rows()) rows.push_back(r.entries());
    terms.push_back({{"coeff", coeff_to_string(coeff)}, {"rows", rows}});
  }
  return {{"shape", c.shape().parts()}, {"type", c.type().parts()}, {"terms", terms}};
}

}  // namespace

Multiset parse_multiset(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw ParseError("unterminated multiset \"" + std::string(text) + "\"");
    text = text.substr(1, text.size() - 2);
  }
  const auto entries = parse_ints(text, "multiset");
  for (int v : entries)
    if (v < 1) throw ParseError("multiset entries must be positive integers, got " + std::to_string(v));
  return Multiset::from_entries(entries);
}

Tableau parse_tableau(std::string_view text, ParseOptions options, ParseNotes* notes) {
  std::vector<std::string_view> lines;
  for (auto line : split(text, '\n'))
    if (!trim(line).empty()) lines.push_back(line);
  std::vector<Multiset> rows;
  for (auto line : lines)
    for (auto part : split(line, '/'))
      rows.push_back(row_from_entries(parse_ints(part, "tableau"), options, notes, part));
  return Tableau(std::move(rows));
}

std::vector<Tableau> parse_tableaux(std::string_view text, ParseOptions options, ParseNotes* notes) {
  std::vector<Tableau> out;
  std::string block;
  auto flush = [&] {
    if (!trim(block).empty()) out.push_back(parse_tableau(block, options, notes));
    block.clear();
  };
  for (auto line : split(text, '\n')) {
    if (trim(line).empty())
      flush();
    else
      block.append(line).push_back('\n');
  }
  flush();
  return out;
}

std::string render_tableau_lines(const Tableau& t) {
  std::string s = t.to_string();
  std::string out;
  for (auto part : split(s, '/')) {
    out += trim(part);
    out += '\n';
  }
  return out;
}

Json tableau_to_json(const Tableau& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows()) rows.push_back(r.entries());
  return {{"shape", t.shape().parts()}, {"rows", rows}};
}

Tableau tableau_from_json(const Json& j, ParseOptions options, ParseNotes* notes) {
  try {
    if (!j.is_object() || !j.contains("rows")) throw ParseError("tableau JSON needs a \"rows\" array");
    std::vector<Multiset> rows;
    for (const auto& r : j.at("rows")) {
      const auto entries = r.get<std::vector<int>>();
      rows.push_back(row_from_entries(entries, options, notes, r.dump()));
    }
    Tableau t(std::move(rows));
    if (j.contains("shape") && Composition(j.at("shape").get<std::vector<int>>()) != t.shape())
      throw ParseError("tableau JSON rows do not match its shape");
    return t;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed tableau JSON: ") + e.what());
  }
}

Tableau parse_tableau_any(std::string_view text, ParseOptions options, ParseNotes* notes) {
  if (looks_like_json(text)) return tableau_from_json(parse_json(text), options, notes);
  return parse_tableau(text, options, notes);
}

LinComb parse_lincomb(std::string_view text, ParseOptions options) {
  std::vector<std::pair<LaurentPoly, Tableau>> terms;
  for (auto line : split(text, '\n')) {
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      if (line == "0" && terms.empty()) continue;
      throw ParseError("expected \"coeff : tableau\", got \"" + std::string(line) + "\"");
    }
    terms.emplace_back(LaurentPoly::parse(trim(line.substr(0, colon))),
                       parse_tableau(line.substr(colon + 1), options));
  }
  if (terms.empty()) return LinComb();
  LinComb c(terms.front().second.shape(), terms.front().second.type());
  try {
    for (const auto& [coeff, t] : terms) c.add(t, coeff);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("inconsistent combination: ") + e.what());
  }
  return c;
}

Json lincomb_to_json(const LinComb& c) { return lincomb_json(c); }
Json lincomb_to_json(const RationalLinComb& c) { return lincomb_json(c); }

LinComb lincomb_from_json(const Json& j, ParseOptions options) {
  try {
    if (!j.is_object() || !j.contains("terms")) throw ParseError("combination JSON needs a \"terms\" array");
    std::vector<std::pair<LaurentPoly, Tableau>> terms;
    for (const auto& term : j.at("terms")) {
      const Json& coeff = term.at("coeff");
      LaurentPoly p = coeff.is_number_integer() ? LaurentPoly(coeff.get<int>())
                                                : LaurentPoly::parse(coeff.get<std::string>());
      terms.emplace_back(std::move(p), tableau_from_json(term, options));
    }
    Composition shape, type;
    if (j.contains("shape")) shape = Composition(j.at("shape").get<std::vector<int>>());
    else if (!terms.empty()) shape = terms.front().second.shape();
    if (j.contains("type")) type = Composition(j.at("type").get<std::vector<int>>());
    else if (!terms.empty()) type = terms.front().second.type();
    LinComb c(shape, type);
    for (const auto& [coeff, t] : terms) c.add(t, coeff);
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed combination JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("inconsistent combination JSON: ") + e.what());
  }
}

LinComb parse_lincomb_any(std::string_view text, ParseOptions options) {
  if (looks_like_json(text)) return lincomb_from_json(parse_json(text), options);
  return parse_lincomb(text, options);
}

Composition parse_composition(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("unterminated composition \"" + std::string(text) + "\"");
    text = text.substr(1, text.size() - 2);
  }
  const auto parts = parse_ints(text, "composition");
  for (int p : parts)
    if (p < 0) throw ParseError("composition parts must be nonnegative");
  return Composition(parts);
}

}  // namespace tabhom
