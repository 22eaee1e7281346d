#include "kahler/presentation_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "kahler/error.hpp"

namespace kahler {

namespace {

struct Word {
  std::string text;
  std::size_t column;
};

std::string strip_comment(const std::string& line) {
  for (std::size_t i = 0; i < line.size(); ++i)
    if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) return line.substr(0, i);
  return line;
}

std::vector<Word> split_words(const std::string& line) {
  std::vector<Word> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    words.push_back({line.substr(start, i - start), start + 1});
  }
  return words;
}

const FieldDescriptor& parse_field_line(const std::vector<Word>& w, std::size_t line) {
  auto fail = [&](const std::string& msg, std::size_t col) -> const FieldDescriptor& { throw ParseError(msg, line, col); };
  if (w.size() < 2) return fail("expected a field after 'field'", w[0].column + 5);
  try {
    if (w.size() == 2) {
      if (w[1].text == "Fp" || w[1].text == "FpX") return fail("missing characteristic", w[1].column + w[1].text.size());
      return parse_field_name(w[1].text);
    }
    if (w[1].text == "Fp" && w.size() == 3) return parse_field_name("Fp:" + w[2].text);
    if (w[1].text == "FpX" && w.size() <= 4)
      return parse_field_name("FpX:" + w[2].text + (w.size() == 4 ? ":" + w[3].text : ""));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    return fail(e.what(), w[1].column);
  }
  return fail("unexpected text after field", w[w.size() - 1].column);
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  const FieldDescriptor* field = nullptr;
  std::optional<std::vector<std::pair<std::string, int>>> vars;
  MonomialOrder order = MonomialOrder::WeightedGrevlex;
  bool order_seen = false;
  Presentation out;
  // Relations are parsed once the ring exists; remember their positions.
  struct PendingRel {
    std::string text;
    std::size_t line;
    std::size_t column;
  };
  std::vector<PendingRel> rels;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    auto words = split_words(line);
    if (words.empty()) continue;
    const std::string& key = words[0].text;
    if (key == "field") {
      if (field) throw ParseError("duplicate field line", line_no, words[0].column);
      field = &parse_field_line(words, line_no);
    } else if (key == "ring") {
      if (vars) throw ParseError("duplicate ring line", line_no, words[0].column);
      vars.emplace();
      for (std::size_t i = 1; i < words.size(); ++i) {
        const auto& w = words[i];
        auto colon = w.text.find(':');
        std::string name = w.text.substr(0, colon);
        int weight = 1;
        if (colon != std::string::npos) {
          std::string digits = w.text.substr(colon + 1);
          if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad weight '" + digits + "'", line_no, w.column + colon + 1);
          weight = std::stoi(digits);
        }
        if (name.empty()) throw ParseError("empty variable name", line_no, w.column);
        vars->emplace_back(name, weight);
      }
    } else if (key == "rel") {
      std::size_t start = words.size() > 1 ? words[1].column - 1 : line.size();
      rels.push_back({line.substr(start), line_no, start + 1});
      if (words.size() == 1) throw ParseError("empty relation", line_no, words[0].column + 3);
    } else if (key == "mode") {
      if (words.size() != 2) throw ParseError("expected one of local, graded, plain", line_no, words[0].column + 4);
      if (words[1].text == "local") out.mode = PresentationMode::Local;
      else if (words[1].text == "graded") out.mode = PresentationMode::Graded;
      else if (words[1].text == "plain") out.mode = PresentationMode::Plain;
      else throw ParseError("unknown mode '" + words[1].text + "'", line_no, words[1].column);
    } else if (key == "order") {
      if (order_seen) throw ParseError("duplicate order line", line_no, words[0].column);
      order_seen = true;
      if (words.size() != 2) throw ParseError("expected grevlex or lex", line_no, words[0].column + 5);
      if (words[1].text == "grevlex") order = MonomialOrder::WeightedGrevlex;
      else if (words[1].text == "lex") order = MonomialOrder::Lex;
      else throw ParseError("unknown order '" + words[1].text + "'", line_no, words[1].column);
    } else if (key == "base") {
      if (words.size() != 2) throw ParseError("expected field or degree0", line_no, words[0].column + 4);
      if (words[1].text == "field") out.base = BaseKind::CoefficientField;
      else if (words[1].text == "degree0") out.base = BaseKind::DegreeZero;
      else throw ParseError("unknown base '" + words[1].text + "'", line_no, words[1].column);
    } else {
      throw ParseError("unknown directive '" + key + "'", line_no, words[0].column);
    }
  }

  if (!field) throw ParseError("missing field line", line_no ? line_no : 1, 1);
  if (!vars) throw ParseError("missing ring line", line_no ? line_no : 1, 1);
  std::vector<std::string> names;
  std::vector<int> weights;
  for (auto& [n, w] : *vars) {
    names.push_back(n);
    weights.push_back(w);
  }
  try {
    out.ring = PolyRing::make(*field, names, weights, order);
  } catch (const Error& e) {
    throw ParseError(e.what(), 0, 1);
  }
  for (const auto& r : rels) {
    try {
      out.relations.push_back(parse_polynomial(r.text, out.ring));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), r.line, r.column + e.column() - 1);
    } catch (const Error& e) {
      throw ParseError(e.what(), r.line, r.column);
    }
  }
  return out;
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  const FieldDescriptor& f = p.ring->field();
  out << "field ";
  switch (f.kind()) {
    case FieldKind::Rationals: out << "QQ"; break;
    case FieldKind::PrimeField: out << "Fp " << f.characteristic(); break;
    case FieldKind::RationalFunctions:
      out << "FpX " << f.characteristic();
      if (f.variable() != "x") out << ' ' << f.variable();
      break;
  }
  out << "\nring";
  for (std::size_t i = 0; i < p.ring->nvars(); ++i) out << ' ' << p.ring->names()[i] << ':' << p.ring->weights()[i];
  out << '\n';
  if (p.ring->order() == MonomialOrder::Lex) out << "order lex\n";
  for (const auto& r : p.relations) out << "rel " << r.to_string() << '\n';
  out << "mode " << to_string(p.mode) << '\n';
  if (p.base == BaseKind::DegreeZero) out << "base degree0\n";
  return out.str();
}

}  // namespace kahler
